#pragma once

// Finite-field point models: Gr(2,5)(F_p) by echelon representatives,
// intersections with translates, the degenerations Z_v, and Jacobian ranks.
//
// Convention for translates: the model of g is Gr ∩ g.Gr, and [α] ∈ g.Gr
// iff g^{-1}α is decomposable. The one-parameter family
// 2α∧v(α) + t v(α)∧v(α) = 0 at t = 1 is therefore Gr ∩ (id+v)^{-1}.Gr.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gr25/quadrics.hpp"

namespace gr25 {

using Coords10 = std::array<std::uint32_t, kPlucker>;

/// A point of P^9(F_p), first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  /// Normalizes; throws std::invalid_argument for the zero vector.
  ProjectivePoint(const std::array<std::uint64_t, kPlucker>& raw, std::uint32_t p);
  static ProjectivePoint from_vector(const Vector<Fp>& v);

  const Coords10& coords() const { return c_; }
  std::uint32_t prime() const { return p_; }
  Vector<Fp> to_vector() const;
  std::string to_string() const;  // "[1:0:3:...]"

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  ProjectivePoint() = default;
  std::uint32_t p_ = 0;
  Coords10 c_{};
};

/// A point of Gr(2,5)(F_p) with the echelon rows a, b of its subspace.
struct GrassmannPoint {
  ProjectivePoint point;
  std::array<std::uint32_t, kRank> a;
  std::array<std::uint32_t, kRank> b;
};

/// (p^5-1)(p^4-1)/((p^2-1)(p-1)).
std::uint64_t grassmannian_point_count(std::uint32_t p);

/// One point per 2-plane of F_p^5, sorted by coordinates. Throws
/// std::invalid_argument unless p is a prime >= 5.
std::vector<GrassmannPoint> enumerate_grassmannian(std::uint32_t p);

/// α ∧ β in ∧^4 V, coordinates indexed by the omitted basis vector.
std::array<std::uint64_t, kRank> wedge22(const Coords10& alpha, const Coords10& beta, std::uint32_t p);

/// Gr ∩ g.Gr over F_p with g invertible 10x10 (or 5x5, read through ∧²).
class TranslateModel {
 public:
  TranslateModel(const PrimeField& field, const Matrix<Fp>& g);
  /// The model of g^{-T}: Y_g = Gr ∩ g^{-T}.Gr.
  static TranslateModel dual(const PrimeField& field, const Matrix<Fp>& g);

  const PrimeField& field() const { return field_; }
  const Matrix<Fp>& g() const { return g_; }
  const QuadricSpace<PrimeField>& grassmannian() const { return gr_; }
  const QuadricSpace<PrimeField>& translate() const { return translate_; }
  /// The five Plücker quadrics followed by the five translate quadrics.
  std::vector<Quadric<PrimeField>> all_quadrics() const;

  /// Every translate quadric vanishes at x.
  bool on_translate(const ProjectivePoint& x) const;
  /// g^{-1}x is decomposable.
  bool preimage_decomposable(const ProjectivePoint& x) const;

 private:
  PrimeField field_;
  Matrix<Fp> g_;
  Matrix<Fp> g_inv_;
  QuadricSpace<PrimeField> gr_;
  QuadricSpace<PrimeField> translate_;
  std::array<std::array<std::array<std::uint32_t, kPlucker>, kPlucker>, kRank> fast_;
  std::array<std::array<std::uint32_t, kPlucker>, kPlucker> inv_fast_;
};

/// Points of the given Grassmannian list lying on the translate.
std::vector<ProjectivePoint> intersection_points(const TranslateModel& model,
                                                 const std::vector<GrassmannPoint>& gr);
std::vector<ProjectivePoint> intersection_points(const TranslateModel& model);

/// Rank of the stacked gradients 2A_i x. Throws std::invalid_argument if x
/// is off one of the quadrics or the list is empty.
Index jacobian_rank_at(const ProjectivePoint& x, const std::vector<Quadric<PrimeField>>& quadrics);

enum class ZvDescription {
  Wedge,  // α ∧ v(α) = 0
  Span,   // v(α) ∈ ⟨a,b⟩ ∧ V
};

/// Z_v = {α ∈ Gr : v(α) vanishes in ∧²(V/⟨a,b⟩)} for a 10x10 matrix v.
std::vector<ProjectivePoint> z_v_points(const Matrix<Fp>& v, const std::vector<GrassmannPoint>& gr,
                                        ZvDescription how = ZvDescription::Wedge);
std::vector<ProjectivePoint> z_v_points(const Matrix<Fp>& v, std::uint32_t p,
                                        ZvDescription how = ZvDescription::Wedge);

/// Points of Gr with 2α∧v(α) + t v(α)∧v(α) = 0.
std::vector<ProjectivePoint> family_points(const Matrix<Fp>& v, std::uint32_t t,
                                           const std::vector<GrassmannPoint>& gr);

/// |N - (p^3+p^2+p+1)| <= 104 p^{3/2}.
bool in_weil_window(std::uint64_t n, std::uint32_t p);
double weil_half_width(std::uint32_t p);

/// Hyperplane and span descriptions of Gr ∩ P(W∧V) over the enumerated points.
struct PsiEnumeration {
  std::size_t on_hyperplane = 0;
  std::size_t in_wedge_space = 0;
  bool sets_equal = false;
};
PsiEnumeration psi_enumeration_check(const Subspace<Fp>& w, const std::vector<GrassmannPoint>& gr);

/// One seeded draw of a random 10x10 g over F_p and its model Gr ∩ g.Gr.
struct TranslateDraw {
  std::uint64_t seed;
  std::size_t points;
  std::size_t singular_points;  // Jacobian rank below 6
  bool in_window;
};

/// Draws g from seeds base_seed, base_seed+1, ... until `count` draws have
/// no singular F_p-point. Singular draws are kept in `rejected`. Throws
/// std::runtime_error after max_draws attempts.
struct SmoothSample {
  std::vector<TranslateDraw> accepted;
  std::vector<TranslateDraw> rejected;
};
TranslateDraw translate_draw(std::uint32_t p, std::uint64_t seed, const std::vector<GrassmannPoint>& gr);
SmoothSample sample_smooth_translates(std::uint32_t p, std::uint64_t base_seed, int count,
                                      const std::vector<GrassmannPoint>& gr, int max_draws = 50);

struct PointCountRow {
  std::uint64_t seed;
  std::uint32_t prime;
  std::size_t x_g, y_g, z_v, z_vt;
  bool x_smooth;      // Jacobian rank 6 at every X_g point
  double seconds;
};

/// Side-by-side counts for random g and v; reports, never asserts.
std::vector<PointCountRow> point_count_experiment(const std::vector<std::uint64_t>& seeds,
                                                  const std::vector<std::uint32_t>& primes);

}  // namespace gr25
