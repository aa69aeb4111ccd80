#pragma once

// The SL(V)-invariant tensor Γ in the fifth tensor power of ∧²V, the function
// f(g) = (Γ̃, gΓ) on 10x10 matrices, its restriction to diagonal matrices, and
// the battery that tells g apart from its inverse transpose.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gr25/exterior.hpp"
#include "gr25/random.hpp"

namespace gr25 {

class Permutation {
 public:
  Permutation();  // identity
  /// Images of 1..5 (1-based); must be a bijection.
  explicit Permutation(std::array<int, 5> images);

  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  int sign() const { return sign_; }
  const std::array<int, 5>& images() const { return images_; }
  Permutation compose(const Permutation& inner) const;  // (this ∘ inner)(i)

  /// All 120 permutations in lexicographic order of their image lists.
  static const std::vector<Permutation>& all();

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

 private:
  std::array<int, 5> images_;
  int sign_;
};

using TensorKey = std::array<std::uint8_t, 5>;  // second-power basis positions 0..9

/// Sparse order-5 tensor with integer coefficients on the ∧²-basis. Zero
/// coefficients are never stored.
class Tensor5 {
 public:
  explicit Tensor5(Variance variance = Variance::Vector) : variance_(variance) {}

  void add(const TensorKey& key, std::int64_t c);
  std::int64_t coefficient(const TensorKey& key) const;
  const std::map<TensorKey, std::int64_t>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  Variance variance() const { return variance_; }

  /// The same table with the variance flag flipped (the basis isomorphism).
  Tensor5 dual() const;
  /// Tensor with slots permuted: out[k_{perm(0)}, ...] = this[k_0, ...].
  Tensor5 permute_slots(const std::array<int, 5>& perm) const;
  /// c with other = c * this, if one exists.
  std::optional<Rational> proportionality(const Tensor5& other) const;

  friend bool operator==(const Tensor5& a, const Tensor5& b) {
    return a.variance_ == b.variance_ && a.entries_ == b.entries_;
  }

 private:
  Variance variance_;
  std::map<TensorKey, std::int64_t> entries_;
};

/// Γ as the signed double sum over S5 x S5 of
/// e_{σ1σ2} ⊗ e_{σ3σ4} ⊗ e_{σ'1σ'2} ⊗ e_{σ'3σ'4} ⊗ e_{σ5σ'5}.
const Tensor5& build_gamma();

/// Γ from Γ(ω1..ω5) = (I(ω1 ^ ω2) ^ I(ω3 ^ ω4), ω5), evaluated on dual basis covectors.
Tensor5 build_gamma_from_def();

/// (M^{⊗5} T) as a dense-indexed sparse map over the scalars of M.
template <class S>
std::map<TensorKey, S> tensor_action(const Matrix<S>& m, const Tensor5& t);

/// f(g) = sum over support pairs of Γ̃_I Γ_J prod_k g[I_k, J_k]; homogeneous of degree 5.
template <class S>
S f_evaluate(const Matrix<S>& g);

/// f(g)^2 / det(g): invariant under scaling. Throws std::domain_error when det(g) = 0.
template <class S>
S f_pgl(const Matrix<S>& g);

/// Monomial in the ten variables x_ij (i < j, lex positions), degree 5.
using Monomial10 = std::array<std::uint8_t, 10>;

class MultiPoly10 {
 public:
  void add(const Monomial10& m, const BigInt& c);
  BigInt coefficient(const Monomial10& m) const;
  const std::map<Monomial10, BigInt>& terms() const { return terms_; }
  /// Common degree of all terms; -1 if not homogeneous, 0 for the zero polynomial.
  int homogeneous_degree() const;

  template <ExactField F>
  typename F::Scalar evaluate(const F& field, const std::array<typename F::Scalar, 10>& x) const {
    typename F::Scalar acc = field.zero();
    for (const auto& [m, c] : terms_) {
      typename F::Scalar term = field.from_big(c);
      for (std::size_t k = 0; k < 10; ++k)
        for (int e = 0; e < m[k]; ++e) term *= x[k];
      acc += term;
    }
    return acc;
  }

 private:
  std::map<Monomial10, BigInt> terms_;
};

/// sum over S5 x S5 of x_{σ1σ2} x_{σ3σ4} x_{σ'1σ'2} x_{σ'3σ'4} x_{σ5σ'5} with
/// x_ji = x_ij; terms with σ5 = σ'5 are dropped (there is no variable x_ii).
const MultiPoly10& f_diagonal_polynomial();

/// f(diag(x)) = kDiagonalScale * f_diagonal_polynomial()(x).
inline constexpr long kDiagonalScale = 16;

/// x_12^2 x_34 x_35 x_45.
Monomial10 distinguished_monomial();

struct InverseTransposeTrial {
  std::string f_g;
  std::string f_inverse_transpose;
  bool differs;
};

struct InverseTransposeReport {
  std::uint64_t seed;
  std::uint32_t prime;
  std::vector<InverseTransposeTrial> trials;
  int differing() const;
  /// At least one strict inequality and inequality in >= 90% of trials.
  bool passed() const;
};

/// Draws g in SL(∧²V)(F_p) as shear products and compares f(g) with f(g^{-T}).
InverseTransposeReport distinguish_inverse_transpose(std::uint64_t seed, int trials, std::uint32_t p);

// ---------------------------------------------------------------------------

template <class S>
std::map<TensorKey, S> tensor_action(const Matrix<S>& m, const Tensor5& t) {
  if (m.rows() != kPlucker || m.cols() != kPlucker) {
    throw std::invalid_argument("tensor_action: expects a 10x10 matrix");
  }
  const auto field = field_of(m);
  constexpr int kCells = 100000;
  std::vector<S> cur(kCells, field.zero());
  auto flat = [](const TensorKey& k) {
    int x = 0;
    for (auto c : k) x = x * 10 + c;
    return x;
  };
  for (const auto& [k, c] : t.entries()) cur[static_cast<std::size_t>(flat(k))] = field.from_int(c);
  const int stride[5] = {10000, 1000, 100, 10, 1};
  for (int slot = 0; slot < 5; ++slot) {
    std::vector<S> next(kCells, field.zero());
    const int s = stride[slot];
    for (int cell = 0; cell < kCells; ++cell) {
      const S& v = cur[static_cast<std::size_t>(cell)];
      if (is_zero(v)) continue;
      const int j = (cell / s) % 10;
      const int base = cell - j * s;
      for (int i = 0; i < 10; ++i) {
        if (is_zero(m(i, j))) continue;
        next[static_cast<std::size_t>(base + i * s)] += m(i, j) * v;
      }
    }
    cur = std::move(next);
  }
  std::map<TensorKey, S> out;
  for (int cell = 0; cell < kCells; ++cell) {
    if (is_zero(cur[static_cast<std::size_t>(cell)])) continue;
    TensorKey k;
    int x = cell;
    for (int slot = 4; slot >= 0; --slot) {
      k[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(x % 10);
      x /= 10;
    }
    out.emplace(k, cur[static_cast<std::size_t>(cell)]);
  }
  return out;
}

namespace detail {
std::uint64_t f_evaluate_mod_p(const Matrix<Fp>& g, std::uint32_t p);
BigInt f_evaluate_rational_numerator(const Matrix<Rational>& g, BigInt& denominator);
}  // namespace detail

template <class S>
S f_evaluate(const Matrix<S>& g) {
  if (g.rows() != kPlucker || g.cols() != kPlucker) {
    throw std::invalid_argument("f_evaluate: expects a 10x10 matrix");
  }
  if constexpr (std::is_same_v<S, Fp>) {
    const PrimeField field = field_of(g);
    return field.from_int(static_cast<long>(detail::f_evaluate_mod_p(g, field.p())));
  } else {
    BigInt den;
    BigInt num = detail::f_evaluate_rational_numerator(g, den);
    return Rational(num, den);
  }
}

template <class S>
S f_pgl(const Matrix<S>& g) {
  const S d = det(g);
  if (is_zero(d)) throw std::domain_error("f_pgl: singular matrix");
  const S f = f_evaluate(g);
  return f * f / d;
}

}  // namespace gr25
