#pragma once

// Seeded random generators for matrices and vectors over an exact field.

#include "gr25/linalg.hpp"

namespace gr25 {

template <ExactField F>
Matrix<typename F::Scalar> random_matrix(const F& field, Index rows, Index cols, Rng& rng) {
  Matrix<typename F::Scalar> m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = field.random(rng);
  }
  return m;
}

template <ExactField F>
Vector<typename F::Scalar> random_vector(const F& field, Index n, Rng& rng) {
  Vector<typename F::Scalar> v(n);
  for (Index i = 0; i < n; ++i) v(i) = field.random(rng);
  return v;
}

template <ExactField F>
Vector<typename F::Scalar> random_nonzero_vector(const F& field, Index n, Rng& rng) {
  for (;;) {
    Vector<typename F::Scalar> v = random_vector(field, n, rng);
    if (!is_zero_matrix(v)) return v;
  }
}

template <ExactField F>
Matrix<typename F::Scalar> random_invertible(const F& field, Index n, Rng& rng) {
  for (;;) {
    Matrix<typename F::Scalar> m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

/// Elementary shear I + c E_ij with i != j and c != 0.
template <ExactField F>
Matrix<typename F::Scalar> random_shear(const F& field, Index n, Rng& rng) {
  std::uniform_int_distribution<Index> pick(0, n - 1);
  Index i = pick(rng);
  Index j = pick(rng);
  while (j == i) j = pick(rng);
  Matrix<typename F::Scalar> m = identity(field, n);
  m(i, j) = field.random_nonzero(rng);
  return m;
}

/// Product of `count` random shears: a random element of SL(n).
template <ExactField F>
Matrix<typename F::Scalar> random_shear_product(const F& field, Index n, int count, Rng& rng) {
  Matrix<typename F::Scalar> m = identity(field, n);
  for (int k = 0; k < count; ++k) m = (m * random_shear(field, n, rng)).eval();
  return m;
}

/// SL sampling with a random shear count in [30, 60].
template <ExactField F>
Matrix<typename F::Scalar> random_special_linear(const F& field, Index n, Rng& rng) {
  std::uniform_int_distribution<int> count(30, 60);
  return random_shear_product(field, n, count(rng), rng);
}

}  // namespace gr25
