#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gr25/cohomology.hpp"
#include "oracles.hpp"

using namespace gr25;

namespace {

/// h^q(P^n, Ω^p(k)) by Bott's formula.
BigInt bott_omega(int n, int p, int q, int k) {
  using oracle::binomial;
  if (q == 0 && k > p) return binomial(k + n - p, k) * binomial(k - 1, p);
  if (k == 0 && p == q) return 1;
  if (q == n && k < p - n) return binomial(-k + p, -k) * binomial(-k - 1, n - p);
  return 0;
}

/// T_P^n(k) = Ω^{n-1}(k + n + 1).
BigInt tangent_oracle(int n, int q, int k) { return bott_omega(n, n - 1, q, k + n + 1); }

/// Hilbert function of the Plücker embedding of Gr(2,5).
BigInt plucker_hilbert(long t) { return BigInt((t + 1) * (t + 2) * (t + 2) * (t + 3) * (t + 3) * (t + 4) / 144); }

Weight5 random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  int a1 = d(rng), a2 = d(rng);
  if (a1 < a2) std::swap(a1, a2);
  std::array<int, 3> b{d(rng), d(rng), d(rng)};
  std::sort(b.begin(), b.end(), std::greater<>());
  return {a1, a2, b[0], b[1], b[2]};
}

}  // namespace

TEST(Bott, Calibration) {
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::line(0)).h(0), 1);
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::line(1)).h(0), 10);
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::line(2)).h(0), 50);
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::tangent(0)).h(0), 24);
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::tangent(0)).dims().size(), 1u);
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::line(1)).to_string(), "h0=10");
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::line(-2)).to_string(), "0");
}

TEST(Bott, SingleClasses) {
  auto t5 = bott_single({-4, -5, 0, 0, -1});
  ASSERT_TRUE(t5.has_value());
  EXPECT_EQ(t5->degree, 5);
  EXPECT_EQ(t5->dim, 1);
  EXPECT_EQ(t5->weight, (Weight5{-2, -2, -2, -2, -2}));
  EXPECT_FALSE(bott_single({-1, -2, 0, 0, -1}).has_value());
  auto o5 = bott_single({-5, -5, 0, 0, 0});
  ASSERT_TRUE(o5.has_value());
  EXPECT_EQ(o5->degree, 6);
  EXPECT_EQ(o5->dim, 1);
  EXPECT_THROW(bott_single({0, 1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(bott_single({0, 0, 0, 1, 0}), std::invalid_argument);
}

TEST(Bott, LineBundles) {
  for (int t = -4; t <= -1; ++t) EXPECT_TRUE(bundle_cohomology(HomogeneousBundle::line(t)).is_zero()) << t;
  for (int t = 0; t <= 8; ++t) {
    const auto c = bundle_cohomology(HomogeneousBundle::line(t));
    EXPECT_EQ(c.h(0), plucker_hilbert(t)) << t;
    EXPECT_EQ(c.dims().size(), 1u);
  }
}

TEST(Bott, TangentTwists) {
  EXPECT_TRUE(bundle_cohomology(HomogeneousBundle::tangent(-2)).is_zero());
  EXPECT_EQ(bundle_cohomology(HomogeneousBundle::tangent(-5)).h(5), 1);
  for (int t = 0; t <= 5; ++t) {
    const auto c = bundle_cohomology(HomogeneousBundle::tangent(-t));
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(c.h(i), 0) << "t=" << t << " i=" << i;
  }
}

TEST(Bott, SerreDualityProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const HomogeneousBundle e{{{random_weight(rng), 1}}};
    const auto c = bundle_cohomology(e);
    const auto d = bundle_cohomology(e.dual_twisted(-5));
    for (int q = 0; q <= 6; ++q) EXPECT_EQ(c.h(q), d.h(6 - q));
    EXPECT_LE(c.dims().size(), 1u);
  }
}

TEST(Bott, EulerCharacteristicIsAdditive) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const BundleSummand a{random_weight(rng), 1 + static_cast<long>(rng() % 3)};
    const BundleSummand b{random_weight(rng), 1 + static_cast<long>(rng() % 3)};
    const auto ca = bundle_cohomology({{a}});
    const auto cb = bundle_cohomology({{b}});
    EXPECT_EQ(bundle_cohomology({{a, b}}).euler_characteristic(), ca.euler_characteristic() + cb.euler_characteristic());
  }
}

TEST(ProjectiveSpace, LineBundles) {
  EXPECT_EQ(projective_line_bundle(9, 2, 0), 55);
  EXPECT_EQ(projective_line_bundle(9, -10, 9), 1);
  EXPECT_EQ(projective_line_bundle(9, -5, 9), 0);
  EXPECT_EQ(projective_line_bundle(9, -12, 9), oracle::binomial(11, 9));
  EXPECT_EQ(projective_line_bundle(9, 3, 4), 0);
  EXPECT_THROW(projective_line_bundle(0, 1, 0), std::invalid_argument);
}

TEST(ProjectiveSpace, TangentMatchesBottFormula) {
  for (int n = 2; n <= 9; ++n)
    for (int k = -3 * n; k <= 6; ++k) {
      const auto t = projective_tangent_cohomology(n, k);
      for (int q = 0; q <= n; ++q) EXPECT_EQ(t.h(q), tangent_oracle(n, q, k)) << "n=" << n << " k=" << k << " q=" << q;
    }
  EXPECT_EQ(projective_tangent_cohomology(9, 0).h(0), 99);
  EXPECT_EQ(projective_tangent_cohomology(9, -10).h(8), 1);
  EXPECT_TRUE(projective_tangent_cohomology(9, -2).is_zero());
  EXPECT_THROW(projective_tangent_cohomology(1, 0), std::invalid_argument);
}

TEST(Resolution, PfaffianSquare) {
  const auto p = pfaffian_resolution();
  const auto sq = tensor_resolutions(p, p);
  const Resolution expected{{0, {{0, 1}}},
                            {1, {{-2, 10}}},
                            {2, {{-3, 10}, {-4, 25}}},
                            {3, {{-5, 52}}},
                            {4, {{-6, 25}, {-7, 10}}},
                            {5, {{-8, 10}}},
                            {6, {{-10, 1}}}};
  EXPECT_EQ(sq, expected);
  // Ranks alternate to zero: 1 - 5 + 5 - 1.
  long alt = 0;
  for (const auto& [deg, terms] : p)
    for (const auto& [tw, m] : terms) alt += (deg % 2 ? -m : m);
  EXPECT_EQ(alt, 0);
}

TEST(Resolution, Reports) {
  for (const auto& name : resolution_report_names()) {
    const auto r = resolution_vanishing_report(name);
    EXPECT_TRUE(r.holds) << name;
    EXPECT_EQ(r.name, name);
    EXPECT_FALSE(r.terms.empty());
    for (const auto& q : r.requirements) {
      if (q.must_vanish) {
        EXPECT_EQ(q.dim, 0) << q.group;
      } else {
        EXPECT_EQ(q.dim, q.expected) << q.group;
      }
    }
  }
  EXPECT_EQ(resolution_vanishing_report("lemma32_restricted_tangent").conclusion, "H^1(T_Gr|_X) = 0 forced");
  const auto p9 = resolution_vanishing_report("lemma32_p9_tangent");
  EXPECT_EQ(std::count_if(p9.requirements.begin(), p9.requirements.end(), [](const auto& q) { return q.must_vanish; }), 8);
  EXPECT_THROW(resolution_vanishing_report("lemma99"), std::invalid_argument);
}
