#pragma once

// Exact dense linear algebra over RationalField / PrimeField scalars.
//
// Matrices are plain Eigen matrices whose scalar is Rational or Fp. All
// elimination is by exact field division; pivots are the first nonzero entry
// in the column, which is enough for correctness in exact arithmetic.

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gr25/scalar.hpp"

namespace gr25 {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class S>
struct field_for;
template <>
struct field_for<Rational> {
  using type = RationalField;
};
template <>
struct field_for<Fp> {
  using type = PrimeField;
};
template <class S>
using field_t = typename field_for<S>::type;

/// The field all entries of `m` belong to. Throws FieldMismatch if two
/// entries carry different moduli, std::invalid_argument if no entry is
/// tagged (prime fields only).
template <class Derived>
field_t<typename Derived::Scalar> field_of(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if constexpr (std::is_same_v<S, Rational>) {
    return RationalField{};
  } else {
    std::uint32_t p = 0;
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        const std::uint32_t q = m(i, j).modulus();
        if (q == 0) continue;
        if (p == 0) {
          p = q;
        } else if (p != q) {
          throw FieldMismatch("matrix mixes entries of F_" + std::to_string(p) + " and F_" +
                              std::to_string(q));
        }
      }
    }
    if (p == 0) throw std::invalid_argument("cannot infer the prime field of an untagged matrix");
    return PrimeField(p);
  }
}

template <ExactField F>
Matrix<typename F::Scalar> zeros(const F& field, Index rows, Index cols) {
  return Matrix<typename F::Scalar>::Constant(rows, cols, field.zero());
}

template <ExactField F>
Matrix<typename F::Scalar> identity(const F& field, Index n) {
  Matrix<typename F::Scalar> m = zeros(field, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <ExactField F>
Matrix<typename F::Scalar> from_ints(const F& field,
                                     std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix<typename F::Scalar> m = zeros(field, r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw std::invalid_argument("ragged matrix literal");
    Index j = 0;
    for (long x : row) m(i, j++) = field.from_int(x);
    ++i;
  }
  return m;
}

/// Exact equality, false on shape mismatch.
template <class DA, class DB>
bool equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

template <class S>
struct Echelon {
  Matrix<S> form;             // reduced row echelon form, same shape as input
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing
};

template <class S>
Echelon<S> reduced_row_echelon(Matrix<S> m) {
  Echelon<S> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const S inv = m(row, col).inverse();
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const S factor = m(i, col);
      for (Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.form = std::move(m);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  return static_cast<Index>(reduced_row_echelon(m).pivots.size());
}

template <class S>
S det(Matrix<S> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return S(1);
  S result = field_of(m).one();
  for (Index col = 0; col < n; ++col) {
    Index piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return field_of(m).zero();
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      result = -result;
    }
    result *= m(col, col);
    const S inv = m(col, col).inverse();
    for (Index i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const S factor = m(i, col) * inv;
      for (Index j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return result;
}

/// Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return m;
  const auto field = field_of(m);
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity(field, n);
  Echelon<S> e = reduced_row_echelon(std::move(aug));
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) {
    throw std::domain_error("inverse: matrix is singular");
  }
  return e.form.rightCols(n);
}

/// A linear subspace of S^n held in canonical form: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal
/// exactly when their canonical bases are entrywise equal.
template <class S>
class Subspace {
 public:
  using Field = field_t<S>;

  Subspace(Field field, Index ambient) : field_(std::move(field)), basis_(zeros(field_, 0, ambient)) {}

  /// Span of the rows of `rows`.
  static Subspace span(Field field, const Matrix<S>& rows) {
    Subspace out(std::move(field), rows.cols());
    if (rows.rows() == 0) return out;
    Echelon<S> e = reduced_row_echelon(rows);
    out.basis_ = e.form.topRows(static_cast<Index>(e.pivots.size()));
    out.pivots_ = std::move(e.pivots);
    return out;
  }

  static Subspace whole(Field field, Index ambient) {
    return span(field, identity(field, ambient));
  }

  const Field& field() const { return field_; }
  Index ambient_dim() const { return basis_.cols(); }
  Index dim() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Vector<S>& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("Subspace::contains: wrong length");
    // Reduce v against the canonical basis; pivots make this a single pass.
    Vector<S> r = v;
    for (Index k = 0; k < dim(); ++k) {
      const S c = r(pivots_[static_cast<std::size_t>(k)]);
      if (!is_zero(c)) r -= c * basis_.row(k).transpose();
    }
    return is_zero_matrix(r);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field field_;
  Matrix<S> basis_;
  std::vector<Index> pivots_;
};

/// Null space {x : m x = 0} in canonical form; dim = cols - rank.
template <class S>
Subspace<S> kernel_basis(const field_t<S>& field, const Matrix<S>& m) {
  const Index n = m.cols();
  Echelon<S> e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix<S> gens = zeros(field, n - static_cast<Index>(e.pivots.size()), n);
  Index g = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    gens(g, f) = field.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      gens(g, e.pivots[r]) = -e.form(static_cast<Index>(r), f);
    }
    ++g;
  }
  return Subspace<S>::span(field, gens);
}

template <class S>
Subspace<S> kernel_basis(const Matrix<S>& m) {
  return kernel_basis(field_of(m), m);
}

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace sum: ambient dimensions differ");
  }
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  Matrix<S> stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return Subspace<S>::span(a.field(), stacked);
}

template <class S>
Subspace<S> intersect(const Subspace<S>& a, const Subspace<S>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace intersection: ambient dimensions differ");
  }
  const Index n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace<S>(a.field(), n);
  // x = A^T u = B^T w  <=>  [A^T | -B^T] (u; w) = 0.
  Matrix<S> joint(n, a.dim() + b.dim());
  joint << a.basis().transpose(), -b.basis().transpose();
  const Subspace<S> rel = kernel_basis(a.field(), joint);
  if (rel.dim() == 0) return Subspace<S>(a.field(), n);
  const Matrix<S> images = rel.basis().leftCols(a.dim()) * a.basis();
  return Subspace<S>::span(a.field(), images);
}

template <class S>
struct SubspaceRelation {
  Subspace<S> intersection;
  Subspace<S> sum;
  bool equal;
};

template <class S>
SubspaceRelation<S> subspace_ops(const Subspace<S>& a, const Subspace<S>& b) {
  return {intersect(a, b), sum(a, b), a == b};
}

}  // namespace gr25
