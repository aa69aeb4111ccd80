#include "gr25/suites.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "gr25/cohomology.hpp"
#include "gr25/geometry.hpp"
#include "gr25/invariants.hpp"
#include "gr25/random.hpp"
#include "gr25/symfunc.hpp"

namespace gr25 {

namespace {

const RationalField kQQ{};

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

/// Runs body and stamps its wall time on the returned check.
Check timed(const std::function<Check()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c = body();
  c.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

/// Independent stream per suite, so "all" reproduces each suite's report.
Rng suite_rng(const SuiteOptions& o, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return Rng(seq);
}

const std::vector<GrassmannPoint>& grassmannian_points(std::uint32_t p) {
  static const auto g5 = enumerate_grassmannian(5);
  static const auto g7 = enumerate_grassmannian(7);
  if (p == 5) return g5;
  if (p == 7) return g7;
  throw std::invalid_argument("grassmannian_points: only F_5 and F_7 are cached");
}

template <ExactField F>
Check rank_kernel_check(const F& field, Rng& rng) {
  const int n = 50;
  int good = 0;
  for (int k = 0; k < n; ++k) {
    const auto v = random_nonzero_vector(field, kRank, rng);
    const auto q = plucker_quadric(field, v);
    const auto line = Subspace<typename F::Scalar>::span(field, Matrix<typename F::Scalar>(v.transpose()));
    good += q.rank() == 6 && q.kernel() == wedge_with_space(line);
  }
  return make_check("rank6_kernel/" + field.name(), "every nonzero Plücker quadric q_v has rank 6 and kernel v∧V",
                    good == n, ratio(good, n), ratio(n, n));
}

SuiteReport lemma43(const SuiteOptions& o) {
  SuiteReport r{"lemma43", o.seed, {7, o.prime}, {}};
  Rng rng = suite_rng(o, 43);
  r.checks.push_back(timed([&] { return rank_kernel_check(kQQ, rng); }));
  r.checks.push_back(timed([&] { return rank_kernel_check(PrimeField(7), rng); }));
  r.checks.push_back(timed([&] { return rank_kernel_check(PrimeField(o.prime), rng); }));
  const PrimeField f(o.prime);
  r.checks.push_back(timed([&] {
    int good = 0;
    for (int t = 0; t < o.trials; ++t) {
      const Fp a = f.random(rng);
      const auto v = random_vector(f, kRank, rng);
      const auto w = random_vector(f, kRank, rng);
      const Vector<Fp> av_w = a * v + w;
      good += plucker_quadric(f, av_w) == a * plucker_quadric(f, v) + plucker_quadric(f, w);
    }
    return make_check("linearity/" + f.name(), "v ↦ q_v is linear", good == o.trials, ratio(good, o.trials),
                      ratio(o.trials, o.trials));
  }));
  r.checks.push_back(timed([&] {
    const auto gr = grassmannian_quadrics(f);
    const Index d = QuadricSpace<PrimeField>::coefficient_rank(gr.members());
    return make_check("span/" + f.name(), "the q_{e_i} span a 5-dimensional system |I_Gr(2)| ≅ PV", d == 5,
                      std::to_string(d), "5");
  }));
  return r;
}

SuiteReport lemma44(const SuiteOptions& o) {
  SuiteReport r{"lemma44", o.seed, {5, o.prime}, {}};
  Rng rng = suite_rng(o, 44);
  r.checks.push_back(timed([&] {
    const auto w = Subspace<Rational>::span(kQQ, from_ints(kQQ, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
    const auto h = psi_hyperplane(w);
    const auto e45 = KVector<RationalField>::basis(kQQ, IndexTuple::of({4, 5}), Variance::Covector);
    return make_check("psi/coordinate", "for W = ⟨e1,e2,e3⟩, Gr ∩ P(W∧V) is the hyperplane α^{45} = 0", h == e45,
                      h.to_string(), e45.to_string());
  }));
  const PrimeField f(o.prime);
  r.checks.push_back(timed([&] {
    int good = 0;
    for (int t = 0; t < o.trials; ++t) {
      Matrix<Fp> basis;
      do basis = random_matrix(f, 3, kRank, rng);
      while (rank(basis) < 3);
      const auto h = psi_hyperplane(Subspace<Fp>::span(f, basis));
      const Matrix<Fp> moved = random_invertible(f, 3, rng) * basis;
      good += psi_hyperplane(Subspace<Fp>::span(f, moved)) == h;
    }
    return make_check("psi/basis_change/" + f.name(), "the hyperplane depends only on W", good == o.trials,
                      ratio(good, o.trials), ratio(o.trials, o.trials));
  }));
  const PrimeField f5(5);
  r.checks.push_back(timed([&] {
    const auto w = Subspace<Fp>::span(f5, from_ints(f5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
    const auto e = psi_enumeration_check(w, grassmannian_points(5));
    return make_check("psi/enumeration/fp:5/coordinate",
                      "decomposable α with ⟨H,α⟩ = 0 are exactly the decomposable α in W∧V", e.sets_equal,
                      std::to_string(e.on_hyperplane) + " on H, " + std::to_string(e.in_wedge_space) + " in W∧V",
                      "equal sets");
  }));
  r.checks.push_back(timed([&] {
    Matrix<Fp> basis;
    do basis = random_matrix(f5, 3, kRank, rng);
    while (rank(basis) < 3);
    const auto e = psi_enumeration_check(Subspace<Fp>::span(f5, basis), grassmannian_points(5));
    return make_check("psi/enumeration/fp:5/random",
                      "decomposable α with ⟨H,α⟩ = 0 are exactly the decomposable α in W∧V", e.sets_equal,
                      std::to_string(e.on_hyperplane) + " on H, " + std::to_string(e.in_wedge_space) + " in W∧V",
                      "equal sets");
  }));
  return r;
}

void add_resolution_report(SuiteReport& r, const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  const ResolutionReport rep = resolution_vanishing_report(name);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& q : rep.requirements) {
    const BigInt want = q.must_vanish ? BigInt(0) : q.expected;
    Check c = make_check(name + "/" + q.group, q.must_vanish ? "vanishing required by the resolution"
                                                             : "dimension fixed by the resolution",
                         q.dim == want, q.dim.get_str(), want.get_str());
    r.checks.push_back(std::move(c));
  }
  Check c = make_check(name, rep.conclusion, rep.holds, rep.holds ? "holds" : "fails", "holds");
  c.elapsed = secs;
  r.checks.push_back(std::move(c));
}

SuiteReport lemma45(const SuiteOptions& o) {
  SuiteReport r{"lemma45", o.seed, {o.prime}, {}};
  Rng rng = suite_rng(o, 45);
  const PrimeField f(o.prime);
  r.checks.push_back(timed([&] {
    int good = 0;
    std::ostringstream seen;
    for (int t = 0; t < o.trials; ++t) {
      const Matrix<Fp> g = random_invertible(f, kPlucker, rng);
      const Index d = projective_span_dim<PrimeField>({grassmannian_quadrics(f), translate_quadric_space(f, g)});
      good += d == 9;
      if (d != 9) seen << " trial " << t << ": " << d;
    }
    return make_check("span/" + f.name(),
                      "quadrics through X_g span a P^9: the stacked 10x55 coefficient matrix has rank 10",
                      good == o.trials, ratio(good, o.trials) + seen.str(), ratio(o.trials, o.trials));
  }));
  add_resolution_report(r, "lemma45_quadric_count");
  return r;
}

Quadric<PrimeField> random_full_rank_quadric(const PrimeField& f, Rng& rng) {
  for (;;) {
    const Matrix<Fp> a = random_matrix(f, kPlucker, kPlucker, rng);
    const Matrix<Fp> s = a + a.transpose();
    if (rank(s) == kPlucker) return Quadric<PrimeField>(f, s);
  }
}

SuiteReport lemma46(const SuiteOptions& o) {
  SuiteReport r{"lemma46", o.seed, {7}, {}};
  Rng rng = suite_rng(o, 46);
  const PrimeField f(7);
  const Matrix<Fp> id5 = identity(f, kRank);
  r.checks.push_back(timed([&] {
    const auto q4 = plucker_quadric(f, Vector<Fp>(id5.col(3)));
    const auto q5 = plucker_quadric(f, Vector<Fp>(id5.col(4)));
    const auto c = check_pencil_criterion(q4, q5);
    const auto v = common_singular_vector(q4, q5);
    const bool e45 = v && ProjectivePoint::from_vector(*v) ==
                              ProjectivePoint({0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 7);
    return make_check("pencil/q_e4_q_e5", "corank sum > 10 at three points forces a common singular point",
                      c.hypothesis && c.has_common_singular_point && e45,
                      "top three corank sum " + std::to_string(c.top_three_sum) +
                          (e45 ? ", common singular vector e45" : ", no common singular vector e45"),
                      "sum > 10, common singular vector e45");
  }));
  r.checks.push_back(timed([&] {
    int hyp = 0, ok = 0;
    for (int t = 0; t < o.trials; ++t) {
      Vector<Fp> v = random_nonzero_vector(f, kRank, rng), w;
      do w = random_nonzero_vector(f, kRank, rng);
      while (rank(Matrix<Fp>((Matrix<Fp>(2, kRank) << v.transpose(), w.transpose()).finished())) < 2);
      const auto c = check_pencil_criterion(plucker_quadric(f, v), plucker_quadric(f, w));
      hyp += c.hypothesis;
      ok += c.hypothesis && c.consistent();
    }
    return make_check("pencil/plucker_pencils", "corank sum > 10 at three points forces a common singular point",
                      ok == o.trials, ratio(ok, o.trials) + " hypothesis and common point (" + std::to_string(hyp) +
                                          " with hypothesis)",
                      ratio(o.trials, o.trials));
  }));
  r.checks.push_back(timed([&] {
    int ok = 0, total = 0;
    for (int t = 0; t < o.trials; ++t) {
      const Matrix<Fp> p = random_invertible(f, kPlucker, rng);
      auto block = [&] {
        Matrix<Fp> a = zeros(f, kPlucker, kPlucker);
        const Matrix<Fp> m = random_matrix(f, 6, 6, rng);
        a.bottomRightCorner(6, 6) = m + m.transpose();
        return Quadric<PrimeField>(f, Matrix<Fp>(p.transpose() * a * p));
      };
      const auto q1 = block(), q2 = block();
      if (QuadricSpace<PrimeField>::coefficient_rank({q1, q2}) < 2) continue;
      const auto c = check_pencil_criterion(q1, q2);
      ++total;
      ok += c.hypothesis && c.consistent();
    }
    return make_check("pencil/shared_kernel", "corank sum > 10 at three points forces a common singular point",
                      ok == total && total > 0, ratio(ok, total), ratio(total, total));
  }));
  r.checks.push_back(timed([&] {
    int clean = 0;
    for (int t = 0; t < o.trials; ++t) {
      const auto q1 = random_full_rank_quadric(f, rng);
      const auto q2 = random_full_rank_quadric(f, rng);
      const auto c = check_pencil_criterion(q1, q2);
      clean += !c.hypothesis && c.consistent();
    }
    return make_check("pencil/random_nondegenerate", "generic pencils have no three coranks summing above 10",
                      clean == o.trials, ratio(clean, o.trials), ratio(o.trials, o.trials));
  }));
  return r;
}

SuiteReport invariant(const SuiteOptions& o) {
  SuiteReport r{"invariant", o.seed, {o.prime}, {}};
  Rng rng = suite_rng(o, 47);
  const PrimeField f(o.prime);
  r.checks.push_back(timed([&] {
    const auto c = build_gamma().proportionality(build_gamma_from_def());
    return make_check("gamma/constructions", "the two constructions of Γ agree up to one global scalar",
                      c.has_value(), c ? "scalar " + c->to_string() : "not proportional", "one scalar");
  }));
  r.checks.push_back(timed([&] {
    const Rational v = f_evaluate(identity(kQQ, kPlucker));
    return make_check("f/identity", "value of f at the identity", v == Rational(184320), v.to_string(), "184320");
  }));
  r.checks.push_back(timed([&] {
    int good = 0;
    for (int t = 0; t < o.trials; ++t) {
      const Matrix<Fp> g = random_matrix(f, kPlucker, kPlucker, rng);
      const Matrix<Fp> h = second_exterior_power(random_special_linear(f, kRank, rng));
      const Matrix<Fp> h2 = second_exterior_power(random_special_linear(f, kRank, rng));
      good += f_evaluate(Matrix<Fp>(h * g * h2)) == f_evaluate(g);
    }
    return make_check("f/bi_invariance/" + f.name(), "f(∧²h·g·∧²h') = f(g) for h, h' in SL(V)", good == o.trials,
                      ratio(good, o.trials), ratio(o.trials, o.trials));
  }));
  r.checks.push_back(timed([&] {
    const int d = f_diagonal_polynomial().homogeneous_degree();
    return make_check("diagonal/degree", "f restricted to diagonal matrices is homogeneous of degree 5", d == 5,
                      std::to_string(d), "5");
  }));
  r.checks.push_back(timed([&] {
    const BigInt c = f_diagonal_polynomial().coefficient(distinguished_monomial());
    return make_check("diagonal/coefficient", "x12^2 x34 x35 x45 occurs in the diagonal polynomial", c != 0,
                      c.get_str(), "nonzero");
  }));
  r.checks.push_back(timed([&] {
    const auto rep = distinguish_inverse_transpose(o.seed, o.trials, o.prime);
    return make_check("f/inverse_transpose/" + f.name(), "f is not invariant under g ↦ g^{-T}", rep.passed(),
                      ratio(rep.differing(), o.trials) + " differ", ">= 90% differ, at least 1");
  }));
  return r;
}

SuiteReport plethysm(const SuiteOptions& o) {
  SuiteReport r{"plethysm", o.seed, {}, {}};
  const auto start = std::chrono::steady_clock::now();
  const SymPoly f = plethysm_with_e2(Partition({5, 4, 3, 2, 1}));
  const double build = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks.push_back(timed([&] {
    const BigInt m = schur_multiplicity(f, Partition({6, 6, 6, 6, 6}));
    return make_check("multiplicity/(6,6,6,6,6)", "s_{54321}[e2] contains s_{66666} with multiplicity 2", m == 2,
                      m.get_str(), "2");
  }));
  r.checks.back().elapsed += build;
  r.checks.push_back(timed([&] {
    BigInt sum = 0;
    const auto parts = schur_decomposition(f);
    for (const auto& [mu, m] : parts) sum += m * weyl_dim({mu[0], mu[1], mu[2], mu[3], mu[4]});
    const BigInt value = f.value_at_ones();
    const BigInt dim = weyl_dim({5, 4, 3, 2, 1, 0, 0, 0, 0, 0});
    return make_check("dimension", "Σ mult·dim over constituents equals the value at (1,…,1)",
                      sum == value && value == dim,
                      sum.get_str() + " over " + std::to_string(parts.size()) + " constituents",
                      value.get_str());
  }));
  r.checks.push_back(make_info("terms", "monomial count of s_{54321}[e2]", std::to_string(f.term_count())));
  return r;
}

SuiteReport bwb(const SuiteOptions& o) {
  SuiteReport r{"bwb", o.seed, {}, {}};
  auto h = [](const HomogeneousBundle& b, int q) { return bundle_cohomology(b).h(q); };
  r.checks.push_back(timed([&] {
    const BigInt a = h(HomogeneousBundle::line(1), 0), b = h(HomogeneousBundle::tangent(0), 0);
    const BigInt c = projective_tangent_cohomology(9, 0).h(0);
    return make_check("calibration", "h0(O_Gr(1)) = 10, h0(T_Gr) = 24, h0(T_P9) = 99", a == 10 && b == 24 && c == 99,
                      a.get_str() + ", " + b.get_str() + ", " + c.get_str(), "10, 24, 99");
  }));
  r.checks.push_back(timed([&] {
    int zero = 0, total = 0;
    for (int t = 0; t <= 5; ++t)
      for (int i = 1; i <= 4; ++i) {
        ++total;
        zero += h(HomogeneousBundle::tangent(-t), i) == 0;
      }
    return make_check("tangent/middle", "H^i(T_Gr(-t)) = 0 for 0 <= t <= 5, 1 <= i <= 4", zero == total,
                      ratio(zero, total) + " zero", ratio(total, total));
  }));
  r.checks.push_back(timed([&] {
    const BigInt d = h(HomogeneousBundle::tangent(-5), 5);
    return make_check("tangent/h5(-5)", "H^5(T_Gr(-5)) is one-dimensional", d == 1, d.get_str(), "1");
  }));
  r.checks.push_back(timed([&] {
    std::string seen;
    bool ok = true;
    for (int t = -4; t <= -1; ++t) {
      const auto c = bundle_cohomology(HomogeneousBundle::line(t));
      ok = ok && c.is_zero();
      seen += (seen.empty() ? "" : ", ") + c.to_string();
    }
    return make_check("line/gap", "O_Gr(i) has no cohomology for -4 <= i <= -1", ok, seen, "0, 0, 0, 0");
  }));
  add_resolution_report(r, "lemma32_restricted_tangent");
  add_resolution_report(r, "lemma32_p9_tangent");
  return r;
}

SuiteReport section5(const SuiteOptions& o) {
  SuiteReport r{"section5", o.seed, {5, 7}, {}};
  Rng rng = suite_rng(o, 5);
  const PrimeField f5(5);
  const auto& gr5 = grassmannian_points(5);
  const auto& gr7 = grassmannian_points(7);
  r.checks.push_back(timed([&] {
    return make_check("grassmannian/count/fp:5", "#Gr(2,5)(F_5) is the Gaussian binomial", gr5.size() == 20306,
                      std::to_string(gr5.size()), "20306");
  }));
  r.checks.push_back(timed([&] {
    return make_check("grassmannian/count/fp:7", "#Gr(2,5)(F_7) is the Gaussian binomial", gr7.size() == 140050,
                      std::to_string(gr7.size()), "140050");
  }));
  r.checks.push_back(timed([&] {
    const auto pts = z_v_points(identity(f5, kPlucker), gr5);
    return make_check("wedge2_s_id", "∧²s_id vanishes on all of Gr", pts.size() == gr5.size(),
                      std::to_string(pts.size()) + " points", std::to_string(gr5.size()) + " points");
  }));
  for (int k = 0; k < 3; ++k) {
    const Matrix<Fp> v = random_matrix(f5, kPlucker, kPlucker, rng);
    r.checks.push_back(timed([&] {
      const auto a = z_v_points(v, gr5, ZvDescription::Wedge);
      const auto b = z_v_points(v, gr5, ZvDescription::Span);
      return make_check("z_v/descriptions/" + std::to_string(k), "Z_v is also cut out by the section p∘s_v", a == b,
                        std::to_string(a.size()) + " and " + std::to_string(b.size()) + " points", "equal sets");
    }));
  }
  for (int k = 0; k < 3; ++k) {
    Matrix<Fp> v, g;
    do {
      v = random_matrix(f5, kPlucker, kPlucker, rng);
      g = identity(f5, kPlucker) + v;
    } while (rank(g) < kPlucker);
    r.checks.push_back(timed([&] {
      const auto fam = family_points(v, 1, gr5);
      const auto xs = intersection_points(TranslateModel(f5, inverse(g)), gr5);
      return make_check("family/t1/" + std::to_string(k),
                        "the t = 1 member is Gr ∩ (id+v)^{-1}Gr (the X_g of g = id+v, inverse labeling)", fam == xs,
                        std::to_string(fam.size()) + " and " + std::to_string(xs.size()) + " points", "equal sets");
    }));
  }
  const std::uint64_t base = suite_rng(o, 9)() % 1000000;
  const SmoothSample s = sample_smooth_translates(7, base, 3, gr7);
  for (std::size_t k = 0; k < s.accepted.size(); ++k) {
    const auto& d = s.accepted[k];
    r.checks.push_back(make_check(
        "x_g/weil/fp:7/" + std::to_string(k), "#X_g(F_7) lies in p^3+p^2+p+1 ± 104 p^{3/2}, every point smooth",
        d.in_window && d.singular_points == 0,
        std::to_string(d.points) + " points, " + std::to_string(d.singular_points) + " singular (draw " +
            std::to_string(d.seed) + ")",
        "[" + std::to_string(std::max(0L, 400 - static_cast<long>(weil_half_width(7)))) + ", " +
            std::to_string(400 + static_cast<long>(weil_half_width(7))) + "], 0 singular"));
  }
  for (const auto& d : s.rejected) {
    r.checks.push_back(make_info("x_g/reseeded/fp:7/" + std::to_string(d.seed),
                                 "draw with a singular F_7-point, replaced by the next seed",
                                 std::to_string(d.points) + " points, " + std::to_string(d.singular_points) +
                                     " singular"));
  }
  return r;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"lemma43", lemma43}, {"lemma44", lemma44}, {"lemma45", lemma45}, {"lemma46", lemma46},
      {"invariant", invariant}, {"plethysm", plethysm}, {"bwb", bwb}, {"section5", section5}};
  return r;
}

std::string valid_list() {
  std::string s;
  for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

UnknownSuite::UnknownSuite(const std::string& name)
    : std::invalid_argument("unknown suite '" + name + "' (valid: " + valid_list() + ")") {}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be at least 1");
  PrimeField{options.prime};
  if (name == "all") {
    SuiteReport all{"all", options.seed, {}, {}};
    for (const auto& [n, fn] : registry()) {
      SuiteReport part = fn(options);
      for (auto p : part.primes)
        if (std::find(all.primes.begin(), all.primes.end(), p) == all.primes.end()) all.primes.push_back(p);
      for (auto& c : part.checks) {
        c.id = n + "/" + c.id;
        all.checks.push_back(std::move(c));
      }
    }
    std::sort(all.primes.begin(), all.primes.end());
    return all;
  }
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(options);
  throw UnknownSuite(name);
}

}  // namespace gr25
