#include "gr25/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace gr25 {

Permutation::Permutation() : images_{1, 2, 3, 4, 5}, sign_(1) {}

Permutation::Permutation(std::array<int, 5> images) : images_(images), sign_(1) {
  std::array<bool, 5> seen{};
  for (int x : images_) {
    if (x < 1 || x > 5 || seen[static_cast<std::size_t>(x - 1)]) {
      throw std::invalid_argument("Permutation: not a bijection of 1..5");
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (images_[i] > images_[j]) ++inversions;
  sign_ = inversions % 2 == 0 ? 1 : -1;
}

Permutation Permutation::compose(const Permutation& inner) const {
  std::array<int, 5> out{};
  for (int i = 1; i <= 5; ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(inner(i));
  return Permutation(out);
}

const std::vector<Permutation>& Permutation::all() {
  static const std::vector<Permutation> perms = [] {
    std::vector<Permutation> out;
    std::array<int, 5> a{1, 2, 3, 4, 5};
    do {
      out.emplace_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
  }();
  return perms;
}

void Tensor5::add(const TensorKey& key, std::int64_t c) {
  for (auto k : key) {
    if (k >= kPlucker) throw std::invalid_argument("Tensor5: key position out of range");
  }
  if (c == 0) return;
  auto [it, inserted] = entries_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

std::int64_t Tensor5::coefficient(const TensorKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

Tensor5 Tensor5::dual() const {
  Tensor5 out(variance_ == Variance::Vector ? Variance::Covector : Variance::Vector);
  out.entries_ = entries_;
  return out;
}

Tensor5 Tensor5::permute_slots(const std::array<int, 5>& perm) const {
  Tensor5 out(variance_);
  for (const auto& [k, c] : entries_) {
    TensorKey moved{};
    for (std::size_t s = 0; s < 5; ++s) moved[static_cast<std::size_t>(perm[s])] = k[s];
    out.add(moved, c);
  }
  return out;
}

std::optional<Rational> Tensor5::proportionality(const Tensor5& other) const {
  if (entries_.size() != other.entries_.size()) return std::nullopt;
  if (entries_.empty()) return Rational(1);
  std::optional<Rational> ratio;
  for (const auto& [k, c] : entries_) {
    const std::int64_t d = other.coefficient(k);
    if (d == 0) return std::nullopt;
    Rational r(BigInt(static_cast<long>(d)), BigInt(static_cast<long>(c)));
    if (!ratio) {
      ratio = r;
    } else if (*ratio != r) {
      return std::nullopt;
    }
  }
  return ratio;
}

namespace {

/// e_{ab} as (position, sign); sign 0 when a == b.
std::pair<std::uint8_t, int> ordered_pair(int a, int b) {
  if (a == b) return {0, 0};
  if (a < b) return {static_cast<std::uint8_t>(pair_position(a, b)), 1};
  return {static_cast<std::uint8_t>(pair_position(b, a)), -1};
}

}  // namespace

const Tensor5& build_gamma() {
  static const Tensor5 gamma = [] {
    Tensor5 t(Variance::Vector);
    for (const auto& s : Permutation::all()) {
      for (const auto& sp : Permutation::all()) {
        const std::pair<std::uint8_t, int> factors[5] = {
            ordered_pair(s(1), s(2)), ordered_pair(s(3), s(4)), ordered_pair(sp(1), sp(2)),
            ordered_pair(sp(3), sp(4)), ordered_pair(s(5), sp(5))};
        int sign = s.sign() * sp.sign();
        TensorKey key{};
        for (std::size_t k = 0; k < 5; ++k) {
          sign *= factors[k].second;
          key[k] = factors[k].first;
        }
        if (sign != 0) t.add(key, sign);
      }
    }
    return t;
  }();
  return gamma;
}

Tensor5 build_gamma_from_def() {
  const RationalField qq;
  using KQ = KVector<RationalField>;
  // u[a][b] = I(e^{I_a} ^ e^{I_b}) in V.
  std::vector<std::vector<KQ>> u(kPlucker);
  for (int a = 0; a < kPlucker; ++a) {
    for (int b = 0; b < kPlucker; ++b) {
      const auto wa = KQ::basis(qq, IndexTuple::at(2, a), Variance::Covector);
      const auto wb = KQ::basis(qq, IndexTuple::at(2, b), Variance::Covector);
      u[a].push_back(contract_I(wedge(wa, wb)));
    }
  }
  Tensor5 t(Variance::Vector);
  for (int a = 0; a < kPlucker; ++a)
    for (int b = 0; b < kPlucker; ++b) {
      if (u[a][b].is_zero()) continue;
      for (int c = 0; c < kPlucker; ++c)
        for (int d = 0; d < kPlucker; ++d) {
          if (u[c][d].is_zero()) continue;
          const KQ top = wedge(u[a][b], u[c][d]);
          for (const auto& [tuple, coef] : top.terms()) {
            // Pairing with e^{I_5} picks out this coefficient.
            if (!coef.is_integer()) throw std::logic_error("build_gamma_from_def: non-integer coefficient");
            t.add({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c),
                   static_cast<std::uint8_t>(d), static_cast<std::uint8_t>(tuple.position())},
                  coef.num().get_si());
          }
        }
    }
  return t;
}

namespace detail {

std::uint64_t f_evaluate_mod_p(const Matrix<Fp>& g, std::uint32_t p) {
  std::array<std::array<std::uint64_t, kPlucker>, kPlucker> m{};
  for (int i = 0; i < kPlucker; ++i)
    for (int j = 0; j < kPlucker; ++j) m[i][j] = g(i, j).residue();
  const auto& entries = build_gamma().entries();
  std::vector<std::pair<TensorKey, std::uint64_t>> support;
  support.reserve(entries.size());
  for (const auto& [k, c] : entries) {
    const std::int64_t r = ((c % static_cast<std::int64_t>(p)) + p) % p;
    support.emplace_back(k, static_cast<std::uint64_t>(r));
  }
  std::uint64_t total = 0;
  for (const auto& [ki, ci] : support) {
    std::uint64_t inner = 0;
    for (const auto& [kj, cj] : support) {
      std::uint64_t prod = cj;
      for (std::size_t s = 0; s < 5 && prod != 0; ++s) prod = prod * m[ki[s]][kj[s]] % p;
      inner += prod;
      if (inner >= (1ULL << 62)) inner %= p;
    }
    total = (total + ci * (inner % p)) % p;
  }
  return total;
}

BigInt f_evaluate_rational_numerator(const Matrix<Rational>& g, BigInt& denominator) {
  // Clear denominators: g = G / D with G integral, so f(g) = f(G) / D^5.
  BigInt d = 1;
  for (int i = 0; i < kPlucker; ++i)
    for (int j = 0; j < kPlucker; ++j) d = lcm(d, g(i, j).den());
  std::array<std::array<BigInt, kPlucker>, kPlucker> m;
  for (int i = 0; i < kPlucker; ++i)
    for (int j = 0; j < kPlucker; ++j) m[i][j] = g(i, j).num() * (d / g(i, j).den());
  const auto& entries = build_gamma().entries();
  BigInt total = 0;
  BigInt prod;
  for (const auto& [ki, ci] : entries) {
    BigInt inner = 0;
    for (const auto& [kj, cj] : entries) {
      prod = m[ki[0]][kj[0]];
      for (std::size_t s = 1; s < 5 && prod != 0; ++s) prod *= m[ki[s]][kj[s]];
      if (prod == 0) continue;
      if (cj > 0) {
        inner += prod * static_cast<long>(cj);
      } else {
        inner -= prod * static_cast<long>(-cj);
      }
    }
    total += inner * static_cast<long>(ci);
  }
  denominator = d * d * d * d * d;
  return total;
}

}  // namespace detail

void MultiPoly10::add(const Monomial10& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly10::coefficient(const Monomial10& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly10::homogeneous_degree() const {
  int degree = -2;
  for (const auto& [m, c] : terms_) {
    const int d = std::accumulate(m.begin(), m.end(), 0);
    if (degree == -2) {
      degree = d;
    } else if (degree != d) {
      return -1;
    }
  }
  return degree == -2 ? 0 : degree;
}

const MultiPoly10& f_diagonal_polynomial() {
  static const MultiPoly10 poly = [] {
    MultiPoly10 out;
    for (const auto& s : Permutation::all()) {
      for (const auto& sp : Permutation::all()) {
        if (s(5) == sp(5)) continue;
        Monomial10 m{};
        const std::pair<int, int> pairs[5] = {{s(1), s(2)}, {s(3), s(4)}, {sp(1), sp(2)}, {sp(3), sp(4)}, {s(5), sp(5)}};
        for (auto [a, b] : pairs) ++m[static_cast<std::size_t>(pair_position(std::min(a, b), std::max(a, b)))];
        out.add(m, 1);
      }
    }
    return out;
  }();
  return poly;
}

Monomial10 distinguished_monomial() {
  Monomial10 m{};
  m[static_cast<std::size_t>(pair_position(1, 2))] = 2;
  m[static_cast<std::size_t>(pair_position(3, 4))] = 1;
  m[static_cast<std::size_t>(pair_position(3, 5))] = 1;
  m[static_cast<std::size_t>(pair_position(4, 5))] = 1;
  return m;
}

int InverseTransposeReport::differing() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.differs; }));
}

bool InverseTransposeReport::passed() const {
  const int n = static_cast<int>(trials.size());
  const int d = differing();
  return d >= 1 && 10 * d >= 9 * n;
}

InverseTransposeReport distinguish_inverse_transpose(std::uint64_t seed, int trials, std::uint32_t p) {
  if (trials < 1) throw std::invalid_argument("distinguish_inverse_transpose: trials must be positive");
  const PrimeField field(p);
  Rng rng(seed);
  InverseTransposeReport report{seed, p, {}};
  for (int t = 0; t < trials; ++t) {
    const Matrix<Fp> g = random_special_linear(field, kPlucker, rng);
    const Matrix<Fp> git = inverse(g).transpose();
    const Fp a = f_evaluate(g);
    const Fp b = f_evaluate(git);
    report.trials.push_back({a.to_string(), b.to_string(), a != b});
  }
  return report;
}

}  // namespace gr25
