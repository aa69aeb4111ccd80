#pragma once

// Quadratic forms on the second exterior power: Plücker quadrics, the
// quadric systems of Grassmannian translates, pencils and their common
// singular points, and the hyperplane attached to a net of Plücker quadrics.
//
// A quadric is stored as a symmetric matrix A with q(x) = x^T A x; no factor
// of 1/2 is absorbed, so the polar form is x^T A y (char != 2).

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gr25/exterior.hpp"

namespace gr25 {

template <ExactField F>
class Quadric {
 public:
  using Scalar = typename F::Scalar;

  Quadric(F field, Matrix<Scalar> a) : field_(std::move(field)), a_(std::move(a)) {
    if (a_.rows() != a_.cols()) throw std::invalid_argument("Quadric: matrix is not square");
    if (!equal(a_, a_.transpose())) throw std::invalid_argument("Quadric: matrix is not symmetric");
  }

  const F& field() const { return field_; }
  const Matrix<Scalar>& matrix() const { return a_; }
  Index variables() const { return a_.rows(); }

  Scalar evaluate(const Vector<Scalar>& x) const { return (x.transpose() * a_ * x)(0, 0); }
  Vector<Scalar> gradient(const Vector<Scalar>& x) const { return field_.from_int(2) * (a_ * x); }

  Index rank() const { return gr25::rank(a_); }
  Index corank() const { return variables() - rank(); }
  Subspace<Scalar> kernel() const { return kernel_basis(field_, a_); }
  bool is_zero() const { return is_zero_matrix(a_); }

  /// Upper-triangle entries (i <= j), row by row: n(n+1)/2 coordinates.
  Vector<Scalar> coefficients() const {
    const Index n = variables();
    Vector<Scalar> v(n * (n + 1) / 2);
    Index k = 0;
    for (Index i = 0; i < n; ++i) {
      for (Index j = i; j < n; ++j) v(k++) = a_(i, j);
    }
    return v;
  }

  friend Quadric operator+(const Quadric& a, const Quadric& b) {
    return Quadric(a.field_, a.a_ + b.a_);
  }
  friend Quadric operator*(const Scalar& s, const Quadric& q) { return Quadric(q.field_, s * q.a_); }
  friend bool operator==(const Quadric& a, const Quadric& b) { return equal(a.a_, b.a_); }

 private:
  F field_;
  Matrix<Scalar> a_;
};

/// A basis of a linear system of quadrics, tagged with what it cuts out.
template <ExactField F>
class QuadricSpace {
 public:
  QuadricSpace(std::vector<Quadric<F>> members, std::string provenance)
      : members_(std::move(members)), provenance_(std::move(provenance)) {
    if (members_.empty()) throw std::invalid_argument("QuadricSpace: no members");
    if (coefficient_rank(members_) != static_cast<Index>(members_.size())) {
      throw std::invalid_argument("QuadricSpace: members are linearly dependent");
    }
  }

  const std::vector<Quadric<F>>& members() const { return members_; }
  const std::string& provenance() const { return provenance_; }
  const F& field() const { return members_.front().field(); }
  Index dim() const { return static_cast<Index>(members_.size()); }

  /// Rank of the stacked coefficient vectors of a list of quadrics.
  static Index coefficient_rank(const std::vector<Quadric<F>>& qs) {
    if (qs.empty()) return 0;
    const Index width = qs.front().coefficients().size();
    Matrix<typename F::Scalar> stacked(static_cast<Index>(qs.size()), width);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (qs[i].variables() != qs.front().variables()) {
        throw std::invalid_argument("quadrics in different numbers of variables");
      }
      stacked.row(static_cast<Index>(i)) = qs[i].coefficients().transpose();
    }
    return gr25::rank(stacked);
  }

  /// The subspace of coefficient vectors spanned by the members.
  Subspace<typename F::Scalar> coefficient_span() const {
    Matrix<typename F::Scalar> stacked(dim(), members_.front().coefficients().size());
    for (Index i = 0; i < dim(); ++i) {
      stacked.row(i) = members_[static_cast<std::size_t>(i)].coefficients().transpose();
    }
    return Subspace<typename F::Scalar>::span(field(), stacked);
  }

 private:
  std::vector<Quadric<F>> members_;
  std::string provenance_;
};

/// q_v(x) = x ^ x ^ v read against vol_V, as a 10x10 symmetric matrix:
/// A_IJ = coefficient of e_I ^ e_J ^ v.
template <ExactField F>
Quadric<F> plucker_quadric(const F& field, const Vector<typename F::Scalar>& v) {
  if (v.size() != kRank) throw std::invalid_argument("plucker_quadric: v must have 5 coordinates");
  Matrix<typename F::Scalar> a = zeros(field, kPlucker, kPlucker);
  for (int r = 0; r < kPlucker; ++r) {
    const IndexTuple ti = IndexTuple::at(2, r);
    for (int c = 0; c < kPlucker; ++c) {
      const IndexTuple tj = IndexTuple::at(2, c);
      const int s_ij = shuffle_sign(ti, tj);
      if (s_ij == 0) continue;
      const auto ij = IndexTuple::from_mask(static_cast<std::uint8_t>(ti.mask() | tj.mask()));
      const auto rest = IndexTuple::from_mask(static_cast<std::uint8_t>(0x1F & ~ij.mask()));
      const int s = s_ij * shuffle_sign(ij, rest);
      const auto& coord = v(rest.indices().front() - 1);
      a(r, c) = s > 0 ? coord : -coord;
    }
  }
  return Quadric<F>(field, std::move(a));
}

/// The five Plücker quadrics q_{e_1}, ..., q_{e_5} cutting out Gr(2,5).
template <ExactField F>
QuadricSpace<F> grassmannian_quadrics(const F& field) {
  std::vector<Quadric<F>> qs;
  const Matrix<typename F::Scalar> id = identity(field, kRank);
  for (int i = 0; i < kRank; ++i) qs.push_back(plucker_quadric(field, Vector<typename F::Scalar>(id.col(i))));
  return QuadricSpace<F>(std::move(qs), "Gr");
}

/// Quadrics cutting out M.Gr for an invertible M; M may be given as a 10x10
/// matrix or as a 5x5 matrix h, in which case M is its second exterior power.
/// Members are M^{-T} A_i M^{-1}. Throws std::domain_error if M is singular.
template <ExactField F>
QuadricSpace<F> translate_quadric_space(const F& field, const Matrix<typename F::Scalar>& m) {
  Matrix<typename F::Scalar> big;
  std::string provenance;
  if (m.rows() == kRank && m.cols() == kRank) {
    big = second_exterior_power(m);
    provenance = "wedge2(h).Gr";
  } else if (m.rows() == kPlucker && m.cols() == kPlucker) {
    big = m;
    provenance = "g.Gr";
  } else {
    throw std::invalid_argument("translate_quadric_space: expects a 5x5 or 10x10 matrix");
  }
  const Matrix<typename F::Scalar> inv = inverse(big);
  std::vector<Quadric<F>> qs;
  const QuadricSpace<F> gr = grassmannian_quadrics(field);
  for (const auto& q : gr.members()) {
    qs.emplace_back(field, (inv.transpose() * q.matrix() * inv).eval());
  }
  return QuadricSpace<F>(std::move(qs), provenance);
}

/// dim of the projective span of the union of the given systems.
template <ExactField F>
Index projective_span_dim(const std::vector<QuadricSpace<F>>& spaces) {
  if (spaces.empty()) throw std::invalid_argument("projective_span_dim: no quadric spaces");
  std::vector<Quadric<F>> all;
  for (const auto& s : spaces) all.insert(all.end(), s.members().begin(), s.members().end());
  return QuadricSpace<F>::coefficient_rank(all) - 1;
}

/// A nonzero vector in ker A1 ∩ ker A2 (the first canonical basis vector),
/// or nullopt if the kernels meet only in 0.
template <ExactField F>
std::optional<Vector<typename F::Scalar>> common_singular_vector(const Quadric<F>& q1,
                                                                 const Quadric<F>& q2) {
  const auto meet = intersect(q1.kernel(), q2.kernel());
  if (meet.dim() == 0) return std::nullopt;
  return Vector<typename F::Scalar>(meet.basis().row(0).transpose());
}

struct PencilPoint {
  std::uint32_t lambda;  // [lambda : mu] in P^1(F_p)
  std::uint32_t mu;
  Index corank;
};

/// Coranks of lambda*q1 + mu*q2 at the p+1 points [1:t] (t = 0..p-1) and [0:1].
/// Throws std::invalid_argument if q1 and q2 are linearly dependent.
inline std::vector<PencilPoint> pencil_corank_profile(const Quadric<PrimeField>& q1,
                                                      const Quadric<PrimeField>& q2) {
  if (!(q1.field() == q2.field())) throw FieldMismatch("pencil: quadrics over different fields");
  if (QuadricSpace<PrimeField>::coefficient_rank({q1, q2}) < 2) {
    throw std::invalid_argument("pencil: quadrics are proportional");
  }
  const PrimeField& field = q1.field();
  const Index n = q1.variables();
  std::vector<PencilPoint> out;
  out.reserve(field.p() + 1);
  for (std::uint32_t t = 0; t < field.p(); ++t) {
    const Matrix<Fp> m = q1.matrix() + field.from_int(t) * q2.matrix();
    out.push_back({1, t, n - rank(m)});
  }
  out.push_back({0, 1, n - rank(q2.matrix())});
  return out;
}

/// One instance of the three-coranks criterion: whether some three pencil
/// members have corank sum exceeding the number of variables, and whether a
/// common singular vector exists.
struct PencilCriterion {
  bool hypothesis = false;
  Index top_three_sum = 0;
  bool has_common_singular_point = false;
  bool consistent() const { return !hypothesis || has_common_singular_point; }
};

inline PencilCriterion check_pencil_criterion(const Quadric<PrimeField>& q1,
                                              const Quadric<PrimeField>& q2) {
  auto profile = pencil_corank_profile(q1, q2);
  std::vector<Index> coranks;
  for (const auto& pt : profile) coranks.push_back(pt.corank);
  std::partial_sort(coranks.begin(), coranks.begin() + 3, coranks.end(), std::greater<>());
  PencilCriterion c;
  c.top_three_sum = coranks[0] + coranks[1] + coranks[2];
  c.hypothesis = c.top_three_sum > q1.variables();
  c.has_common_singular_point = common_singular_vector(q1, q2).has_value();
  return c;
}

/// W ^ V inside the second exterior power, for a subspace W of V.
template <class S>
Subspace<S> wedge_with_space(const Subspace<S>& w) {
  if (w.ambient_dim() != kRank) throw std::invalid_argument("wedge_with_space: W must lie in V");
  const auto& field = w.field();
  Matrix<S> gens = zeros(field, w.dim() * kRank, kPlucker);
  for (Index r = 0; r < w.dim(); ++r) {
    const auto wr = vector_from(field, Vector<S>(w.basis().row(r).transpose()));
    for (int j = 1; j <= kRank; ++j) {
      gens.row(r * kRank + (j - 1)) = wedge(wr, basis_vector(field, j)).coords().transpose();
    }
  }
  return Subspace<S>::span(field, gens);
}

/// For a 3-dimensional W in V: the covector H (up to scale, canonically
/// normalized) annihilating W ^ V, so that Gr ∩ P(W ^ V) = Gr ∩ {H = 0}.
template <class S>
KVector<field_t<S>> psi_hyperplane(const Subspace<S>& w) {
  if (w.ambient_dim() != kRank || w.dim() != 3) {
    throw std::invalid_argument("psi_hyperplane: W must be a 3-dimensional subspace of V");
  }
  const Subspace<S> wv = wedge_with_space(w);
  if (wv.dim() != kPlucker - 1) throw std::logic_error("psi_hyperplane: W ^ V is not 9-dimensional");
  const Subspace<S> ann = kernel_basis(w.field(), wv.basis());
  return KVector<field_t<S>>::from_coords(w.field(), 2, Vector<S>(ann.basis().row(0).transpose()),
                                          Variance::Covector);
}

}  // namespace gr25
