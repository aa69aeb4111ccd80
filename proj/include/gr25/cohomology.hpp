#pragma once

// Cohomology of GL(5)-homogeneous bundles on Gr(2,5) by Bott's algorithm,
// of twisted tangent bundles of P^n by the Euler sequence, and the vanishing
// ledgers built on the Pfaffian resolution of the Grassmannian.
//
// A weight (a1, a2 | b1, b2, b3) has a1 >= a2 and b1 >= b2 >= b3. O(t) is
// (t, t | 0, 0, 0) and the tangent bundle is (1, 0 | 0, 0, -1); with this
// convention h0(O(1)) = 10 and h0(T) = 24.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gr25/scalar.hpp"

namespace gr25 {

using Weight5 = std::array<int, 5>;

struct BottClass {
  int degree;     // the single nonzero cohomological degree
  Weight5 weight; // dominant GL(5) weight of that cohomology group
  BigInt dim;
};

/// nullopt when the ρ-shifted weight has a repeated entry (all cohomology
/// vanishes). Throws std::invalid_argument if either block is not dominant.
std::optional<BottClass> bott_single(const Weight5& w);

struct BundleSummand {
  Weight5 weight;
  long multiplicity = 1;
};

struct HomogeneousBundle {
  std::vector<BundleSummand> summands;

  static HomogeneousBundle line(int t);
  /// T_Gr ⊗ O(t).
  static HomogeneousBundle tangent(int t);
  /// E^∨ ⊗ O(twist), summand by summand.
  HomogeneousBundle dual_twisted(int twist) const;
};

/// Nonzero dimensions by degree.
class CohomologyTable {
 public:
  void add(int degree, const BigInt& dim);
  BigInt h(int degree) const;
  const std::map<int, BigInt>& dims() const { return dims_; }
  bool is_zero() const { return dims_.empty(); }
  BigInt euler_characteristic() const;
  std::string to_string() const;  // "h0=10" or "0"

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  std::map<int, BigInt> dims_;
};

CohomologyTable bundle_cohomology(const HomogeneousBundle& b);

/// h^q(P^n, O(k)).
BigInt projective_line_bundle(int n, int k, int q);

/// H^q(P^n, T(k)) for all q from the Euler sequence. Throws for n < 2.
CohomologyTable projective_tangent_cohomology(int n, int k);

/// Term list of a resolution: homological degree -> (twist -> multiplicity).
using Resolution = std::map<int, std::map<int, long>>;

/// 0 -> O(-5) -> O(-3)^5 -> O(-2)^5 -> O.
Resolution pfaffian_resolution();
/// Tensor product of two resolutions by convolution of degrees and twists.
Resolution tensor_resolutions(const Resolution& a, const Resolution& b);

struct VanishingRequirement {
  std::string group;  // e.g. "H^2(T_Gr(-2))"
  BigInt dim;
  bool must_vanish;   // false for groups reported for context only
  BigInt expected;    // meaningful when !must_vanish and the value is pinned
};

struct ResolutionReport {
  std::string name;
  std::vector<std::string> terms;
  std::vector<VanishingRequirement> requirements;
  std::string conclusion;
  bool holds = false;
};

/// name ∈ {lemma32_restricted_tangent, lemma32_p9_tangent, lemma45_quadric_count};
/// throws std::invalid_argument otherwise.
ResolutionReport resolution_vanishing_report(const std::string& name);

std::vector<std::string> resolution_report_names();

}  // namespace gr25
