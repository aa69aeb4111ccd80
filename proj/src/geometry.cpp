#include "gr25/geometry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "gr25/random.hpp"

namespace gr25 {

namespace {

using U64 = std::uint64_t;
using Vec10 = std::array<U64, kPlucker>;
using Mat10 = std::array<std::array<std::uint32_t, kPlucker>, kPlucker>;

// pos[i][j]: lex position of e_i ^ e_j, 0-based i < j.
constexpr std::array<std::array<int, kRank>, kRank> kPos = [] {
  std::array<std::array<int, kRank>, kRank> t{};
  int k = 0;
  for (int i = 0; i < kRank; ++i)
    for (int j = i + 1; j < kRank; ++j) {
      t[i][j] = k;
      t[j][i] = k;
      ++k;
    }
  return t;
}();

Mat10 to_fast(const Matrix<Fp>& m) {
  Mat10 out{};
  for (int i = 0; i < kPlucker; ++i)
    for (int j = 0; j < kPlucker; ++j) out[i][j] = m(i, j).residue();
  return out;
}

Vec10 apply(const Mat10& m, const Coords10& x, U64 p) {
  Vec10 y{};
  for (int i = 0; i < kPlucker; ++i) {
    U64 acc = 0;
    for (int j = 0; j < kPlucker; ++j) acc = (acc + U64(m[i][j]) * x[j]) % p;
    y[i] = acc;
  }
  return y;
}

U64 quadratic(const Mat10& a, const Coords10& x, U64 p) {
  const Vec10 ax = apply(a, x, p);
  U64 acc = 0;
  for (int i = 0; i < kPlucker; ++i) acc = (acc + ax[i] * x[i]) % p;
  return acc;
}

Coords10 narrow(const Vec10& v) {
  Coords10 c{};
  for (int i = 0; i < kPlucker; ++i) c[i] = static_cast<std::uint32_t>(v[i]);
  return c;
}

bool is_zero5(const std::array<U64, kRank>& w) {
  return std::all_of(w.begin(), w.end(), [](U64 x) { return x == 0; });
}

/// Rank of a small list of vectors mod p by elimination.
int rank_mod(std::vector<Vec10> rows, U64 p) {
  int r = 0;
  for (int c = 0; c < kPlucker && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    U64 inv = 1;
    for (U64 e = p - 2, b = rows[r][c]; e; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (auto& x : rows[r]) x = x * inv % p;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const U64 f = rows[i][c];
      for (int k = 0; k < kPlucker; ++k) rows[i][k] = (rows[i][k] + (p - f) * rows[r][k]) % p;
    }
    ++r;
  }
  return r;
}

Coords10 plucker(const std::array<std::uint32_t, kRank>& a, const std::array<std::uint32_t, kRank>& b, U64 p) {
  Coords10 c{};
  for (int i = 0; i < kRank; ++i)
    for (int j = i + 1; j < kRank; ++j)
      c[kPos[i][j]] = static_cast<std::uint32_t>((U64(a[i]) * b[j] + p * p - U64(a[j]) * b[i]) % p);
  return c;
}

bool in_span_description(const GrassmannPoint& pt, const Coords10& w, U64 p) {
  std::vector<Vec10> gens;
  for (const auto* row : {&pt.a, &pt.b}) {
    for (int k = 0; k < kRank; ++k) {
      std::array<std::uint32_t, kRank> e{};
      e[k] = 1;
      Vec10 g{};
      const Coords10 c = plucker(*row, e, p);
      std::copy(c.begin(), c.end(), g.begin());
      gens.push_back(g);
    }
  }
  const int base = rank_mod(gens, p);
  Vec10 wv{};
  std::copy(w.begin(), w.end(), wv.begin());
  gens.push_back(wv);
  return rank_mod(std::move(gens), p) == base;
}

}  // namespace

ProjectivePoint::ProjectivePoint(const std::array<std::uint64_t, kPlucker>& raw, std::uint32_t p) : p_(p) {
  int first = -1;
  for (int i = 0; i < kPlucker; ++i)
    if (raw[i] % p != 0) {
      first = i;
      break;
    }
  if (first < 0) throw std::invalid_argument("ProjectivePoint: zero vector");
  const U64 inv = Fp::make(static_cast<std::int64_t>(raw[first] % p), p).inverse().residue();
  for (int i = 0; i < kPlucker; ++i) c_[i] = static_cast<std::uint32_t>(raw[i] % p * inv % p);
}

ProjectivePoint ProjectivePoint::from_vector(const Vector<Fp>& v) {
  if (v.size() != kPlucker) throw std::invalid_argument("ProjectivePoint: expects 10 coordinates");
  std::array<U64, kPlucker> raw{};
  const std::uint32_t p = field_of(v).p();
  for (int i = 0; i < kPlucker; ++i) raw[i] = v(i).residue();
  return ProjectivePoint(raw, p);
}

Vector<Fp> ProjectivePoint::to_vector() const {
  Vector<Fp> v(kPlucker);
  for (int i = 0; i < kPlucker; ++i) v(i) = Fp::make(c_[i], p_);
  return v;
}

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < kPlucker; ++i) os << (i ? ":" : "") << c_[i];
  os << ']';
  return os.str();
}

std::uint64_t grassmannian_point_count(std::uint32_t p) {
  const U64 q = p;
  return (q * q * q * q * q - 1) * (q * q * q * q - 1) / ((q * q - 1) * (q - 1));
}

std::vector<GrassmannPoint> enumerate_grassmannian(std::uint32_t p) {
  const PrimeField field(p);  // validates p
  std::vector<GrassmannPoint> out;
  out.reserve(grassmannian_point_count(p));
  for (int i = 0; i < kRank; ++i)
    for (int j = i + 1; j < kRank; ++j) {
      // Free slots: a_k for k > i, k != j; b_k for k > j.
      std::vector<std::pair<int, int>> slots;
      for (int k = i + 1; k < kRank; ++k)
        if (k != j) slots.emplace_back(0, k);
      for (int k = j + 1; k < kRank; ++k) slots.emplace_back(1, k);
      U64 total = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) total *= p;
      for (U64 code = 0; code < total; ++code) {
        std::array<std::uint32_t, kRank> a{}, b{};
        a[i] = 1;
        b[j] = 1;
        U64 c = code;
        for (const auto& [row, k] : slots) {
          (row == 0 ? a : b)[k] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        const Coords10 coords = plucker(a, b, p);
        std::array<U64, kPlucker> raw{};
        std::copy(coords.begin(), coords.end(), raw.begin());
        out.push_back({ProjectivePoint(raw, p), a, b});
      }
    }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.point < y.point; });
  return out;
}

std::array<std::uint64_t, kRank> wedge22(const Coords10& x, const Coords10& y, std::uint32_t p) {
  std::array<U64, kRank> out{};
  const U64 q = p;
  for (int omit = 0; omit < kRank; ++omit) {
    std::array<int, 4> r{};
    int n = 0;
    for (int k = 0; k < kRank; ++k)
      if (k != omit) r[n++] = k;
    auto m = [&](const Coords10& z, int s, int t) -> U64 { return z[kPos[r[s]][r[t]]]; };
    const U64 plus = m(x, 0, 1) * m(y, 2, 3) % q + m(x, 0, 3) * m(y, 1, 2) % q + m(x, 1, 2) * m(y, 0, 3) % q +
                     m(x, 2, 3) * m(y, 0, 1) % q;
    const U64 minus = m(x, 0, 2) * m(y, 1, 3) % q + m(x, 1, 3) * m(y, 0, 2) % q;
    out[omit] = (plus + 2 * q - minus % q) % q;
  }
  return out;
}

TranslateModel::TranslateModel(const PrimeField& field, const Matrix<Fp>& g)
    : field_(field),
      g_(g.rows() == kRank ? second_exterior_power(g) : g),
      g_inv_(inverse(g_)),
      gr_(grassmannian_quadrics(field)),
      translate_(translate_quadric_space(field, g_)) {
  for (int i = 0; i < kRank; ++i) fast_[i] = to_fast(translate_.members()[i].matrix());
  inv_fast_ = to_fast(g_inv_);
}

TranslateModel TranslateModel::dual(const PrimeField& field, const Matrix<Fp>& g) {
  const Matrix<Fp> big = g.rows() == kRank ? second_exterior_power(g) : g;
  return TranslateModel(field, inverse(big).transpose().eval());
}

std::vector<Quadric<PrimeField>> TranslateModel::all_quadrics() const {
  std::vector<Quadric<PrimeField>> out = gr_.members();
  out.insert(out.end(), translate_.members().begin(), translate_.members().end());
  return out;
}

bool TranslateModel::on_translate(const ProjectivePoint& x) const {
  for (const auto& a : fast_)
    if (quadratic(a, x.coords(), field_.p()) != 0) return false;
  return true;
}

bool TranslateModel::preimage_decomposable(const ProjectivePoint& x) const {
  const Coords10 y = narrow(apply(inv_fast_, x.coords(), field_.p()));
  return is_zero5(wedge22(y, y, field_.p()));
}

std::vector<ProjectivePoint> intersection_points(const TranslateModel& model, const std::vector<GrassmannPoint>& gr) {
  std::vector<ProjectivePoint> out;
  for (const auto& pt : gr)
    if (model.on_translate(pt.point)) out.push_back(pt.point);
  return out;
}

std::vector<ProjectivePoint> intersection_points(const TranslateModel& model) {
  return intersection_points(model, enumerate_grassmannian(model.field().p()));
}

Index jacobian_rank_at(const ProjectivePoint& x, const std::vector<Quadric<PrimeField>>& quadrics) {
  if (quadrics.empty()) throw std::invalid_argument("jacobian_rank_at: no quadrics");
  const Vector<Fp> v = x.to_vector();
  Matrix<Fp> jac(static_cast<Index>(quadrics.size()), kPlucker);
  for (std::size_t i = 0; i < quadrics.size(); ++i) {
    if (quadrics[i].field().p() != x.prime()) throw FieldMismatch("jacobian_rank_at: field mismatch");
    if (!quadrics[i].evaluate(v).is_zero()) {
      throw std::invalid_argument("jacobian_rank_at: point is not on quadric " + std::to_string(i));
    }
    jac.row(static_cast<Index>(i)) = quadrics[i].gradient(v).transpose();
  }
  return rank(jac);
}

std::vector<ProjectivePoint> z_v_points(const Matrix<Fp>& v, const std::vector<GrassmannPoint>& gr, ZvDescription how) {
  if (v.rows() != kPlucker || v.cols() != kPlucker) throw std::invalid_argument("z_v_points: v must be 10x10");
  std::vector<ProjectivePoint> out;
  if (gr.empty()) return out;
  const std::uint32_t p = gr.front().point.prime();
  const Mat10 fast = to_fast(v);
  for (const auto& pt : gr) {
    const Coords10 w = narrow(apply(fast, pt.point.coords(), p));
    const bool hit = how == ZvDescription::Wedge ? is_zero5(wedge22(pt.point.coords(), w, p))
                                                 : in_span_description(pt, w, p);
    if (hit) out.push_back(pt.point);
  }
  return out;
}

std::vector<ProjectivePoint> z_v_points(const Matrix<Fp>& v, std::uint32_t p, ZvDescription how) {
  return z_v_points(v, enumerate_grassmannian(p), how);
}

std::vector<ProjectivePoint> family_points(const Matrix<Fp>& v, std::uint32_t t, const std::vector<GrassmannPoint>& gr) {
  if (v.rows() != kPlucker || v.cols() != kPlucker) throw std::invalid_argument("family_points: v must be 10x10");
  std::vector<ProjectivePoint> out;
  if (gr.empty()) return out;
  const std::uint32_t p = gr.front().point.prime();
  const Mat10 fast = to_fast(v);
  for (const auto& pt : gr) {
    const Coords10 w = narrow(apply(fast, pt.point.coords(), p));
    const auto cross = wedge22(pt.point.coords(), w, p);
    const auto square = wedge22(w, w, p);
    bool zero = true;
    for (int k = 0; k < kRank && zero; ++k) zero = (2 * cross[k] + U64(t % p) * square[k]) % p == 0;
    if (zero) out.push_back(pt.point);
  }
  return out;
}

double weil_half_width(std::uint32_t p) { return 104.0 * std::pow(static_cast<double>(p), 1.5); }

bool in_weil_window(std::uint64_t n, std::uint32_t p) {
  const double centre = std::pow(p, 3) + std::pow(p, 2) + p + 1;
  return std::abs(static_cast<double>(n) - centre) <= weil_half_width(p);
}

PsiEnumeration psi_enumeration_check(const Subspace<Fp>& w, const std::vector<GrassmannPoint>& gr) {
  const auto h = psi_hyperplane(w);
  const Subspace<Fp> wv = wedge_with_space(w);
  PsiEnumeration out;
  bool equal = true;
  for (const auto& pt : gr) {
    const Vector<Fp> x = pt.point.to_vector();
    Fp dot = Fp::make(0, pt.point.prime());
    for (int i = 0; i < kPlucker; ++i) dot += h.coords()(i) * x(i);
    const bool on_h = dot.is_zero();
    const bool in_wv = wv.contains(x);
    out.on_hyperplane += on_h;
    out.in_wedge_space += in_wv;
    equal = equal && on_h == in_wv;
  }
  out.sets_equal = equal;
  return out;
}

TranslateDraw translate_draw(std::uint32_t p, std::uint64_t seed, const std::vector<GrassmannPoint>& gr) {
  const PrimeField field(p);
  Rng rng(seed);
  const TranslateModel model(field, random_invertible(field, kPlucker, rng));
  const auto xs = intersection_points(model, gr);
  const auto qs = model.all_quadrics();
  TranslateDraw d{seed, xs.size(), 0, in_weil_window(xs.size(), p)};
  for (const auto& pt : xs) d.singular_points += jacobian_rank_at(pt, qs) != 6;
  return d;
}

SmoothSample sample_smooth_translates(std::uint32_t p, std::uint64_t base_seed, int count,
                                      const std::vector<GrassmannPoint>& gr, int max_draws) {
  SmoothSample s;
  for (int k = 0; static_cast<int>(s.accepted.size()) < count; ++k) {
    if (k >= max_draws) throw std::runtime_error("sample_smooth_translates: too many singular draws");
    const TranslateDraw d = translate_draw(p, base_seed + static_cast<std::uint64_t>(k), gr);
    (d.singular_points == 0 ? s.accepted : s.rejected).push_back(d);
  }
  return s;
}

std::vector<PointCountRow> point_count_experiment(const std::vector<std::uint64_t>& seeds,
                                                  const std::vector<std::uint32_t>& primes) {
  std::vector<PointCountRow> rows;
  for (const std::uint32_t p : primes) {
    const PrimeField field(p);
    const auto gr = enumerate_grassmannian(p);
    for (const std::uint64_t seed : seeds) {
      const auto start = std::chrono::steady_clock::now();
      Rng rng(seed);
      const Matrix<Fp> g = random_invertible(field, kPlucker, rng);
      const Matrix<Fp> v = random_matrix(field, kPlucker, kPlucker, rng);
      const TranslateModel x_model(field, g);
      const auto xs = intersection_points(x_model, gr);
      bool smooth = true;
      const auto qs = x_model.all_quadrics();
      for (const auto& pt : xs) smooth = smooth && jacobian_rank_at(pt, qs) == 6;
      PointCountRow row{seed, p, xs.size(), intersection_points(TranslateModel::dual(field, g), gr).size(),
                        z_v_points(v, gr).size(), z_v_points(Matrix<Fp>(v.transpose()), gr).size(), smooth, 0.0};
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace gr25
