// Command-line front end: verification suites, invariant evaluation,
// plethysm coefficients, Bott cohomology and finite-field point counts.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gr25/cohomology.hpp"
#include "gr25/geometry.hpp"
#include "gr25/invariants.hpp"
#include "gr25/matrix_io.hpp"
#include "gr25/random.hpp"
#include "gr25/suites.hpp"
#include "gr25/symfunc.hpp"

using namespace gr25;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(std::string("bad integer '") + item + "' in " + what);
  }
  return out;
}

SuiteReport invariant_eval(const std::string& path, const std::string& field_flag) {
  MatrixDocument doc = read_matrix_file(path);
  std::uint32_t p = doc.prime;
  if (!field_flag.empty()) {
    const std::uint32_t want = parse_field_spec(field_flag);
    if (!doc.is_rational() && want != doc.prime) {
      throw UsageError("--field " + field_flag + " conflicts with the document field " + doc.field);
    }
    p = want;
  }
  const long n = static_cast<long>(std::max(doc.rational.rows(), doc.modular.rows()));
  const long m = static_cast<long>(std::max(doc.rational.cols(), doc.modular.cols()));
  if (!((n == 10 && m == 10) || (n == 5 && m == 5))) {
    throw UsageError("invariant-eval expects a 10x10 matrix, or a 5x5 matrix read through ∧²");
  }
  SuiteReport r{"invariant-eval", 0, {}, {}};
  const std::string anchor = "f(g) = sum over S5 x S5 of signed contractions with Γ";
  if (p == 0) {
    Matrix<Rational> g = n == 5 ? second_exterior_power(doc.rational) : doc.rational;
    r.checks.push_back(make_info("field", "evaluation field", "rational"));
    r.checks.push_back(make_info("f", anchor, f_evaluate(g).to_string()));
    const Rational d = det(g);
    r.checks.push_back(make_info("f_pgl", "f(g)^2 / det(g), invariant under scaling",
                                 d.is_zero() ? "undefined (det = 0)" : f_pgl(g).to_string()));
  } else {
    r.primes = {p};
    Matrix<Fp> g = doc.is_rational() ? reduce_mod(doc.rational, p) : doc.modular;
    if (n == 5) g = second_exterior_power(g);
    r.checks.push_back(make_info("field", "evaluation field", "fp:" + std::to_string(p)));
    r.checks.push_back(make_info("f", anchor, f_evaluate(g).to_string()));
    const Fp d = det(g);
    r.checks.push_back(make_info("f_pgl", "f(g)^2 / det(g), invariant under scaling",
                                 d.is_zero() ? "undefined (det = 0)" : f_pgl(g).to_string()));
  }
  return r;
}

SuiteReport plethysm_report(const std::string& lambda_text, const std::string& mu_text) {
  Partition lambda, mu;
  try {
    lambda = Partition::parse(lambda_text);
    if (!mu_text.empty()) mu = Partition::parse(mu_text);
    if (lambda.weight() > 15) throw std::invalid_argument("|lambda| must be at most 15");
    if (!mu_text.empty() && (mu.weight() != 2 * lambda.weight() || mu.length() > kVars)) {
      throw std::invalid_argument("mu must have at most 5 parts and weight 2|lambda|");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SymPoly f = plethysm_with_e2(lambda);
  SuiteReport r{"plethysm", 0, {}, {}};
  const std::string name = "s_" + lambda.to_string() + "[e2]";
  r.checks.push_back(make_info("terms", "monomial count of " + name, std::to_string(f.term_count())));
  if (!mu_text.empty()) {
    r.checks.push_back(make_info("multiplicity/" + mu.to_string(), "multiplicity of s_" + mu.to_string() + " in " + name,
                                 schur_multiplicity(f, mu).get_str()));
  }
  const auto parts = schur_decomposition(f);
  BigInt sum = 0;
  for (const auto& [nu, m] : parts) {
    sum += m * weyl_dim({nu[0], nu[1], nu[2], nu[3], nu[4]});
    if (mu_text.empty()) r.checks.push_back(make_info("constituent/" + nu.to_string(), "Schur constituent", m.get_str()));
  }
  std::vector<int> padded(10, 0);
  for (int i = 0; i < lambda.length(); ++i) padded[static_cast<std::size_t>(i)] = lambda[i];
  const BigInt value = f.value_at_ones();
  r.checks.push_back(make_check("dimension", "Σ mult·dim over constituents equals dim S_λ(∧²V)",
                                sum == value && value == weyl_dim(padded), sum.get_str(), value.get_str()));
  return r;
}

SuiteReport bwb_report(const std::string& weights_text, int twist) {
  const auto w = parse_ints(weights_text, "--weights");
  if (w.size() != 5) throw UsageError("--weights needs five integers a1,a2,b1,b2,b3");
  const Weight5 weight{w[0] + twist, w[1] + twist, w[2], w[3], w[4]};
  SuiteReport r{"bwb", 0, {}, {}};
  std::optional<BottClass> c;
  try {
    c = bott_single(weight);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream ws;
  ws << "(" << weight[0] << "," << weight[1] << "|" << weight[2] << "," << weight[3] << "," << weight[4] << ")";
  r.checks.push_back(make_info("weight", "bundle weight after twisting", ws.str()));
  if (!c) {
    r.checks.push_back(make_info("cohomology", "ρ-shifted weight has a repeated entry", "0"));
  } else {
    std::ostringstream cw;
    cw << "(";
    for (int i = 0; i < 5; ++i) cw << (i ? "," : "") << c->weight[static_cast<std::size_t>(i)];
    cw << ")";
    r.checks.push_back(make_info("cohomology", "Bott: a single nonzero degree",
                                 "h" + std::to_string(c->degree) + "=" + c->dim.get_str() + " weight " + cw.str()));
  }
  return r;
}

SuiteReport count_points(std::uint32_t p, std::uint64_t seed, const std::string& variant, bool large) {
  if (!large && p > 7) throw UsageError("enumeration above p = 7 needs --large (cost grows like p^6)");
  const PrimeField field(p);
  const auto gr = enumerate_grassmannian(p);
  SuiteReport r{"count-points", seed, {p}, {}};
  r.checks.push_back(make_check("grassmannian/count", "#Gr(2,5)(F_p) is the Gaussian binomial",
                                gr.size() == grassmannian_point_count(p), std::to_string(gr.size()),
                                std::to_string(grassmannian_point_count(p))));
  Rng rng(seed);
  if (variant == "xg" || variant == "yg") {
    const Matrix<Fp> g = random_invertible(field, kPlucker, rng);
    const TranslateModel model = variant == "xg" ? TranslateModel(field, g) : TranslateModel::dual(field, g);
    const auto pts = intersection_points(model, gr);
    const auto qs = model.all_quadrics();
    std::size_t smooth = 0;
    for (const auto& pt : pts) smooth += jacobian_rank_at(pt, qs) == 6;
    const std::string name = variant == "xg" ? "X_g" : "Y_g";
    r.checks.push_back(make_info(variant + "/count", "#" + name + "(F_p)", std::to_string(pts.size())));
    r.checks.push_back(make_info(variant + "/smooth", "points with Jacobian rank 6",
                                 std::to_string(smooth) + "/" + std::to_string(pts.size())));
    r.checks.push_back(make_info(variant + "/weil", "|N - (p^3+p^2+p+1)| <= 104 p^{3/2}",
                                 in_weil_window(pts.size(), p) ? "inside" : "outside"));
  } else {
    Matrix<Fp> v = random_matrix(field, kPlucker, kPlucker, rng);
    if (variant == "zvt") v = v.transpose().eval();
    const auto pts = z_v_points(v, gr);
    r.checks.push_back(make_info(variant + "/count", variant == "zv" ? "#Z_v(F_p)" : "#Z_{v^t}(F_p)",
                                 std::to_string(pts.size())));
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks on Grassmannian translates Gr(2,5) ∩ g.Gr"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 42;
  std::uint32_t prime = 10007;
  int trials = 20;
  std::string format = "text";
  std::string out_path;
  bool timings = false;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  auto* prime_opt = app.add_option("--prime", prime, "prime field for identities (count-points: 5 or 7)")
                        ->capture_default_str();
  app.add_option("--trials", trials, "trials per randomized check")->capture_default_str();
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}))->capture_default_str();
  app.add_option("--out", out_path, "write the report to FILE");
  app.add_flag("--timings", timings, "include per-check timings");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "lemma43 lemma44 lemma45 lemma46 invariant plethysm bwb section5 all")->required();

  auto* inv = app.add_subcommand("invariant-eval", "evaluate f on a matrix document");
  std::string matrix_path, field_flag;
  inv->add_option("--matrix", matrix_path, "matrix document")->required();
  inv->add_option("--field", field_flag, "evaluate over fp:P");

  auto* pleth = app.add_subcommand("plethysm", "Schur multiplicities of s_λ[e2]");
  std::string lambda_text, mu_text;
  pleth->add_option("--lambda", lambda_text, "partition, e.g. 5,4,3,2,1")->required();
  pleth->add_option("--mu", mu_text, "constituent, e.g. 6,6,6,6,6");

  auto* bwb = app.add_subcommand("bwb", "cohomology of a homogeneous bundle on Gr(2,5)");
  std::string weights_text;
  int twist = 0;
  bwb->add_option("--weights", weights_text, "a1,a2,b1,b2,b3 (use --weights=... for negative leading entries)")
      ->required();
  bwb->add_option("--twist", twist, "added to a1 and a2")->capture_default_str();

  auto* count = app.add_subcommand("count-points", "finite-field point counts");
  std::string variant = "xg";
  bool large = false;
  count->add_option("--variant", variant, "xg yg zv zvt")->check(CLI::IsMember({"xg", "yg", "zv", "zvt"}))
      ->capture_default_str();
  count->add_flag("--large", large, "allow enumeration above p = 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  SuiteReport report;
  try {
    if (trials < 1) throw UsageError("--trials must be at least 1");
    if (verify->parsed()) {
      SuiteOptions o{seed, prime, trials};
      report = run_suite(suite, o);
    } else if (inv->parsed()) {
      report = invariant_eval(matrix_path, field_flag);
    } else if (pleth->parsed()) {
      report = plethysm_report(lambda_text, mu_text);
    } else if (bwb->parsed()) {
      report = bwb_report(weights_text, twist);
    } else if (count->parsed()) {
      report = count_points(prime_opt->count() ? prime : 7, seed, variant, large);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  const std::string doc = emit_report(report, parse_report_format(format), timings);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path);
    if (!(out << doc)) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kUsage;
    }
  }
  return report.passed() ? 0 : 1;
}
