#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's elimination or wedge code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

/// Rank over F_p by elimination in plain 64-bit integers, columns scanned
/// right to left (a different pivot order from the library).
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m) for (auto& x : row) x = ((x % p) + p) % p;
  int r = 0;
  for (int c = cols - 1; c >= 0 && r < rows; --c) {
    int piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::int64_t iv = inv(m[r][c]);
    for (int i = r + 1; i < rows; ++i) {
      const std::int64_t f = m[i][c] * iv % p;
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Sign of a permutation given as a list, by counting inversions pairwise.
inline int permutation_sign(const std::vector<int>& list) {
  int inv = 0;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (list[i] > list[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// Sign of the sorting permutation by explicit bubble sort, 0 on repeats.
inline int sorting_sign(std::vector<int> list) {
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j)
      if (list[i] == list[j]) return 0;
  int sign = 1;
  for (std::size_t pass = 0; pass < list.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      if (list[i] > list[i + 1]) {
        std::swap(list[i], list[i + 1]);
        sign = -sign;
      }
    }
  }
  return sign;
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace oracle
