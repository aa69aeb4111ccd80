#pragma once

// Symmetric polynomials in five variables x1..x5: partitions, Schur
// polynomials via Jacobi–Trudi in an arbitrary list of monomial variables,
// plethysm with e2 by substitution, Schur multiplicities and Weyl dimensions.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gr25/scalar.hpp"

namespace gr25 {

inline constexpr int kVars = 5;
using Exponent = std::array<int, kVars>;

class Partition {
 public:
  Partition() = default;
  /// Parts must be non-negative and weakly decreasing; trailing zeros are dropped.
  explicit Partition(std::vector<int> parts);
  /// "5,4,3,2,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  std::string to_string() const;  // "(5,4,3,2,1)"

  /// All partitions of n with at most max_parts parts, in reverse lex order.
  static std::vector<Partition> all(int n, int max_parts);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Polynomial in x1..x5 with arbitrary-precision integer coefficients.
class SymPoly {
 public:
  SymPoly() = default;
  static SymPoly constant(long c);
  static SymPoly monomial(const Exponent& e, const BigInt& c = 1);

  void add(const Exponent& e, const BigInt& c);
  BigInt coefficient(const Exponent& e) const;
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Sorted (exponent, coefficient) list; the canonical view used for equality.
  std::vector<std::pair<Exponent, BigInt>> sorted_terms() const;

  /// Common degree of the terms; -1 if inhomogeneous, 0 for the zero polynomial.
  int homogeneous_degree() const;
  /// Coefficients invariant under every permutation of the variables.
  bool is_symmetric() const;
  /// Value at x = (1, ..., 1).
  BigInt value_at_ones() const;
  BigInt evaluate(const std::array<BigInt, kVars>& x) const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly& a, const SymPoly& b);

 private:
  // Exponents packed six bits apiece so that products add keys.
  static std::uint64_t pack(const Exponent& e);
  static Exponent unpack(std::uint64_t key);
  std::unordered_map<std::uint64_t, BigInt> terms_;
};

/// The variables x1..x5 themselves.
std::vector<Exponent> base_variables();
/// The ten monomials x_i x_j (i < j), in lex order.
std::vector<Exponent> e2_monomials();

/// h_0..h_kmax of the given monomial variables.
std::vector<SymPoly> complete_homogeneous(const std::vector<Exponent>& vars, int kmax);

/// Jacobi–Trudi: det(h_{λ_i − i + j}) in the given variables.
/// Throws std::invalid_argument when λ has more parts than there are variables.
SymPoly schur_poly(const Partition& lambda, const std::vector<Exponent>& vars);

/// s_λ[e2] in five variables. Throws std::invalid_argument when |λ| > 15.
SymPoly plethysm_with_e2(const Partition& lambda);

/// Multiplicity of s_μ in f by the alternant with ρ = (4,3,2,1,0).
/// Throws std::invalid_argument when |μ| differs from the degree of f or μ has more than 5 parts.
BigInt schur_multiplicity(const SymPoly& f, const Partition& mu);

/// All nonzero Schur multiplicities of a homogeneous symmetric f.
std::map<Partition, BigInt> schur_decomposition(const SymPoly& f);

/// prod_{i<j} (λ_i − λ_j + j − i) / (j − i) for a weakly decreasing integer
/// vector of length n (negative entries allowed).
BigInt weyl_dim(const std::vector<int>& lambda);

}  // namespace gr25
