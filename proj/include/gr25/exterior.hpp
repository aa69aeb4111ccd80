#pragma once

// Exterior algebra of V = k^5 with basis e_1..e_5.
//
// Basis k-vectors are indexed by strictly increasing index tuples, ordered
// globally by degree and then lexicographically; for k = 2 the positions are
// (1,2)=0, (1,3)=1, ..., (4,5)=9. The dual basis satisfies
// <e^I, e_J> = [I == J], and vol_V = e_1 ^ ... ^ e_5.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gr25/linalg.hpp"

namespace gr25 {

inline constexpr int kRank = 5;       // dim V
inline constexpr int kPlucker = 10;   // dim of the second exterior power

class IndexTuple {
 public:
  /// Indices must be strictly increasing and lie in 1..5.
  static IndexTuple of(std::initializer_list<int> indices);
  static IndexTuple from_mask(std::uint8_t mask);
  /// The tuple of the given degree at a lexicographic position.
  static IndexTuple at(int degree, int position);
  static IndexTuple full() { return from_mask(0x1F); }

  std::uint8_t mask() const { return mask_; }
  int degree() const;
  std::vector<int> indices() const;
  int position() const;
  std::string to_string() const;  // "{1,3}"

  friend bool operator==(IndexTuple a, IndexTuple b) { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(IndexTuple a, IndexTuple b);

 private:
  explicit IndexTuple(std::uint8_t mask) : mask_(mask) {}
  std::uint8_t mask_ = 0;
};

/// Number of basis tuples of degree k (binomial(5, k)).
int tuple_count(int degree);

/// Sign of the permutation sorting the concatenation a ++ b, or 0 when the
/// tuples share an index.
int shuffle_sign(IndexTuple a, IndexTuple b);

/// Position of e_i ^ e_j (1-based i < j) in the lex basis of the second power.
int pair_position(int i, int j);
/// Inverse of pair_position.
std::pair<int, int> pair_at(int position);

enum class Variance { Vector, Covector };

template <ExactField F>
class KVector {
 public:
  using Scalar = typename F::Scalar;

  KVector(F field, int degree, Variance variance = Variance::Vector)
      : field_(std::move(field)), degree_(degree), variance_(variance) {
    if (degree < 0 || degree > kRank) throw std::invalid_argument("KVector: degree out of range");
  }

  static KVector basis(F field, IndexTuple t, Variance variance = Variance::Vector) {
    KVector out(field, t.degree(), variance);
    out.add(t, field.one());
    return out;
  }

  /// Builds from dense lex-ordered coordinates.
  static KVector from_coords(F field, int degree, const Vector<Scalar>& coords,
                             Variance variance = Variance::Vector) {
    if (coords.size() != tuple_count(degree)) {
      throw std::invalid_argument("KVector::from_coords: wrong coordinate count");
    }
    KVector out(field, degree, variance);
    for (int k = 0; k < coords.size(); ++k) out.add(IndexTuple::at(degree, k), coords(k));
    return out;
  }

  static KVector volume(F field, Variance variance = Variance::Vector) {
    return basis(std::move(field), IndexTuple::full(), variance);
  }

  const F& field() const { return field_; }
  int degree() const { return degree_; }
  Variance variance() const { return variance_; }
  const std::map<IndexTuple, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(IndexTuple t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  Vector<Scalar> coords() const {
    Vector<Scalar> v = zeros(field_, tuple_count(degree_), 1);
    for (const auto& [t, c] : terms_) v(t.position()) = c;
    return v;
  }

  void add(IndexTuple t, const Scalar& c) {
    if (t.degree() != degree_) throw std::invalid_argument("KVector::add: tuple degree mismatch");
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_scalar(it->second)) terms_.erase(it);
    }
  }

  KVector& operator+=(const KVector& o) {
    check_compatible(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  KVector& operator-=(const KVector& o) {
    check_compatible(o);
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  friend KVector operator+(KVector a, const KVector& b) { return a += b; }
  friend KVector operator-(KVector a, const KVector& b) { return a -= b; }
  friend KVector operator*(const Scalar& s, const KVector& a) {
    KVector out(a.field_, a.degree_, a.variance_);
    for (const auto& [t, c] : a.terms_) out.add(t, s * c);
    return out;
  }
  friend bool operator==(const KVector& a, const KVector& b) {
    if (a.degree_ != b.degree_ || a.variance_ != b.variance_ || a.terms_.size() != b.terms_.size()) {
      return false;
    }
    auto it = b.terms_.begin();
    for (const auto& [t, c] : a.terms_) {
      if (!(t == it->first) || c != it->second) return false;
      ++it;
    }
    return true;
  }

  /// Signed sum such as "3·e{1,3} − 2·e{4,5}" (covectors print as e^{..}).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
      std::string coef = c.to_string();
      bool negative = !coef.empty() && coef[0] == '-';
      if (negative) coef.erase(0, 1);
      if (first) {
        if (negative) os << "−";
      } else {
        os << (negative ? " − " : " + ");
      }
      first = false;
      if (coef != "1") os << coef << "·";
      os << (variance_ == Variance::Vector ? "e" : "e^") << t.to_string();
    }
    return os.str();
  }

  void check_compatible(const KVector& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("KVector: degree mismatch");
    if (variance_ != o.variance_) throw std::invalid_argument("KVector: variance mismatch");
    if (!(field_ == o.field_)) throw FieldMismatch("KVector: field mismatch");
  }

 private:
  static bool is_zero_scalar(const Scalar& c) { return gr25::is_zero(c); }

  F field_;
  int degree_;
  Variance variance_;
  std::map<IndexTuple, Scalar> terms_;
};

/// a ^ b. Both sides must share field and variance and have total degree <= 5.
template <ExactField F>
KVector<F> wedge(const KVector<F>& a, const KVector<F>& b) {
  if (a.variance() != b.variance()) throw std::invalid_argument("wedge: variance mismatch");
  if (!(a.field() == b.field())) throw FieldMismatch("wedge: field mismatch");
  if (a.degree() + b.degree() > kRank) throw std::invalid_argument("wedge: degree exceeds 5");
  KVector<F> out(a.field(), a.degree() + b.degree(), a.variance());
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      const int s = shuffle_sign(ta, tb);
      if (s == 0) continue;
      const auto merged = IndexTuple::from_mask(static_cast<std::uint8_t>(ta.mask() | tb.mask()));
      out.add(merged, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

/// <w, x> for a covector w and a vector x of the same degree.
template <ExactField F>
typename F::Scalar pairing(const KVector<F>& covector, const KVector<F>& vector) {
  if (covector.variance() != Variance::Covector || vector.variance() != Variance::Vector) {
    throw std::invalid_argument("pairing: expects (covector, vector)");
  }
  if (covector.degree() != vector.degree()) throw std::invalid_argument("pairing: degree mismatch");
  typename F::Scalar acc = covector.field().zero();
  for (const auto& [t, c] : covector.terms()) acc += c * vector.coefficient(t);
  return acc;
}

/// The vector e_i (1-based) or, with Variance::Covector, e^i.
template <ExactField F>
KVector<F> basis_vector(const F& field, int i, Variance variance = Variance::Vector) {
  return KVector<F>::basis(field, IndexTuple::of({i}), variance);
}

/// Degree-1 KVector from 5 coordinates.
template <ExactField F>
KVector<F> vector_from(const F& field, const Vector<typename F::Scalar>& v,
                       Variance variance = Variance::Vector) {
  return KVector<F>::from_coords(field, 1, v, variance);
}

/// The 10x10 matrix of the induced action on the second exterior power:
/// entry ((i,j),(k,l)) = g_ik g_jl - g_il g_jk.
template <class S>
Matrix<S> second_exterior_power(const Matrix<S>& g) {
  if (g.rows() != kRank || g.cols() != kRank) {
    throw std::invalid_argument("second_exterior_power: expects a 5x5 matrix");
  }
  Matrix<S> out(kPlucker, kPlucker);
  for (int r = 0; r < kPlucker; ++r) {
    const auto [i, j] = pair_at(r);
    for (int c = 0; c < kPlucker; ++c) {
      const auto [k, l] = pair_at(c);
      out(r, c) = g(i - 1, k - 1) * g(j - 1, l - 1) - g(i - 1, l - 1) * g(j - 1, k - 1);
    }
  }
  return out;
}

/// I : (covector 4-forms) -> V, defined by <I w, e^j> = <w ^ e^j, vol_V>.
template <ExactField F>
KVector<F> contract_I(const KVector<F>& w) {
  if (w.degree() != 4 || w.variance() != Variance::Covector) {
    throw std::invalid_argument("contract_I: expects a degree-4 covector");
  }
  KVector<F> u(w.field(), 1, Variance::Vector);
  for (int j = 1; j <= kRank; ++j) {
    const auto top = wedge(w, basis_vector(w.field(), j, Variance::Covector));
    u.add(IndexTuple::of({j}), top.coefficient(IndexTuple::full()));
  }
  return u;
}

/// True iff a ^ a = 0, i.e. a is a single product of two vectors.
template <ExactField F>
bool is_decomposable(const KVector<F>& a) {
  if (a.degree() != 2) throw std::invalid_argument("is_decomposable: expects a 2-vector");
  return wedge(a, a).is_zero();
}

}  // namespace gr25
