#include <gtest/gtest.h>

#include "gr25/quadrics.hpp"
#include "gr25/random.hpp"

using namespace gr25;

namespace {

const RationalField QQ;

template <ExactField F>
Vector<typename F::Scalar> unit(const F& f, int i) {
  Vector<typename F::Scalar> v = zeros(f, 5, 1);
  v(i - 1) = f.one();
  return v;
}

template <ExactField F>
Vector<typename F::Scalar> e2(const F& f, int i, int j) {
  return KVector<F>::basis(f, IndexTuple::of({i, j})).coords();
}

/// v ^ V as a subspace of the second exterior power, built from the 4 wedges v ^ e_j.
template <ExactField F>
Subspace<typename F::Scalar> v_wedge_V(const F& f, const Vector<typename F::Scalar>& v) {
  Matrix<typename F::Scalar> rows(5, 10);
  for (int j = 1; j <= 5; ++j) rows.row(j - 1) = wedge(vector_from(f, v), basis_vector(f, j)).coords().transpose();
  return Subspace<typename F::Scalar>::span(f, rows);
}

template <ExactField F>
void check_rank6_kernel(const F& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 50; ++t) {
    auto v = random_nonzero_vector(f, 5, rng);
    auto q = plucker_quadric(f, v);
    EXPECT_EQ(q.rank(), 6);
    EXPECT_EQ(q.kernel(), v_wedge_V(f, v));
    EXPECT_EQ(q.kernel().dim(), 4);
  }
}

}  // namespace

TEST(PluckerQuadric, ZeroVectorGivesZeroQuadric) {
  EXPECT_TRUE(plucker_quadric(QQ, Vector<Rational>(zeros(QQ, 5, 1))).is_zero());
  EXPECT_THROW(plucker_quadric(QQ, Vector<Rational>(zeros(QQ, 4, 1))), std::invalid_argument);
}

TEST(PluckerQuadric, E5EntriesFromWedgeOracle) {
  auto q = plucker_quadric(QQ, unit(QQ, 5));
  EXPECT_EQ(q.rank(), 6);
  for (int r = 0; r < 10; ++r) {
    for (int c = 0; c < 10; ++c) {
      auto ti = IndexTuple::at(2, r), tj = IndexTuple::at(2, c);
      auto top = wedge(wedge(KVector<RationalField>::basis(QQ, ti), KVector<RationalField>::basis(QQ, tj)),
                       basis_vector(QQ, 5));
      EXPECT_EQ(q.matrix()(r, c), top.coefficient(IndexTuple::full()));
      const bool in1234 = (ti.mask() | tj.mask()) == 0x0F && (ti.mask() & tj.mask()) == 0;
      EXPECT_EQ(!is_zero(q.matrix()(r, c)), in1234);
    }
  }
  // α = e12 + e34: q(α) = 2·(α^12 α^34 coefficient) = 2.
  Vector<Rational> a = e2(QQ, 1, 2) + e2(QQ, 3, 4);
  EXPECT_EQ(q.evaluate(a), QQ.from_int(2));
  EXPECT_EQ(q.kernel(), v_wedge_V(QQ, unit(QQ, 5)));
}

TEST(PluckerQuadric, Rank6AndKernelRationals) { check_rank6_kernel(QQ, 1); }
TEST(PluckerQuadric, Rank6AndKernelF7) { check_rank6_kernel(PrimeField(7), 2); }
TEST(PluckerQuadric, Rank6AndKernelF10007) { check_rank6_kernel(PrimeField(10007), 3); }

TEST(PluckerQuadric, LinearInV) {
  PrimeField f(10007);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto v = random_vector(f, 5, rng), w = random_vector(f, 5, rng);
    auto a = f.random(rng);
    Vector<Fp> combo = a * v + w;
    EXPECT_EQ(plucker_quadric(f, combo), a * plucker_quadric(f, v) + plucker_quadric(f, w));
  }
}

TEST(PluckerQuadric, VanishesOnDecomposablesWithGradient) {
  PrimeField f(7);
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    auto q = plucker_quadric(f, random_vector(f, 5, rng));
    auto alpha = wedge(vector_from(f, Vector<Fp>(random_vector(f, 5, rng))),
                       vector_from(f, Vector<Fp>(random_vector(f, 5, rng))));
    EXPECT_TRUE(is_zero(q.evaluate(alpha.coords())));
    // Gradient equals 2Aα: check against finite difference q(α+x) - q(α) - q(x) = 2 xᵀAα.
    Vector<Fp> x = random_vector(f, 10, rng);
    Vector<Fp> ax = alpha.coords() + x;
    EXPECT_EQ(q.evaluate(ax) - q.evaluate(alpha.coords()) - q.evaluate(x), (x.transpose() * q.gradient(alpha.coords()))(0, 0));
  }
}

TEST(Quadric, RejectsNonSymmetric) {
  EXPECT_THROW(Quadric<RationalField>(QQ, from_ints(QQ, {{0, 1}, {0, 0}})), std::invalid_argument);
  EXPECT_THROW(Quadric<RationalField>(QQ, zeros(QQ, 2, 3)), std::invalid_argument);
  EXPECT_EQ(Quadric<RationalField>(QQ, identity(QQ, 10)).coefficients().size(), 55);
}

TEST(QuadricSpace, RejectsDependentMembers) {
  auto q = plucker_quadric(QQ, unit(QQ, 1));
  EXPECT_THROW(QuadricSpace<RationalField>({q, QQ.from_int(2) * q}, "x"), std::invalid_argument);
  EXPECT_THROW(QuadricSpace<RationalField>({}, "x"), std::invalid_argument);
}

TEST(TranslateQuadricSpace, IdentityGivesPluckerQuadrics) {
  auto s = translate_quadric_space(QQ, identity(QQ, 10));
  auto gr = grassmannian_quadrics(QQ);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(s.members()[i], gr.members()[i]);
  EXPECT_THROW(translate_quadric_space(QQ, Matrix<Rational>(zeros(QQ, 10, 10))), std::domain_error);
  EXPECT_THROW(translate_quadric_space(QQ, identity(QQ, 7)), std::invalid_argument);
}

TEST(TranslateQuadricSpace, Wedge2PreservesGrassmannianSpan) {
  PrimeField f(10007);
  Rng rng(6);
  for (int t = 0; t < 10; ++t) {
    auto h = random_invertible(f, 5, rng);
    auto s = translate_quadric_space(f, h);
    // Span of {q_{h(e_i)}} (up to the scalar det h, irrelevant for spans).
    std::vector<Quadric<PrimeField>> hq;
    for (int i = 1; i <= 5; ++i) hq.push_back(plucker_quadric(f, Vector<Fp>(h * unit(f, i))));
    EXPECT_EQ(s.coefficient_span(), QuadricSpace<PrimeField>(hq, "h").coefficient_span());
    EXPECT_EQ(s.coefficient_span(), grassmannian_quadrics(f).coefficient_span());
  }
}

TEST(TranslateQuadricSpace, VanishesOnTranslatedDecomposables) {
  PrimeField f(10007);
  Rng rng(7);
  for (int t = 0; t < 5; ++t) {
    auto m = random_invertible(f, 10, rng);
    auto s = translate_quadric_space(f, m);
    for (int k = 0; k < 50; ++k) {
      auto ab = wedge(vector_from(f, Vector<Fp>(random_vector(f, 5, rng))),
                      vector_from(f, Vector<Fp>(random_vector(f, 5, rng))));
      Vector<Fp> x = m * ab.coords();
      for (const auto& q : s.members()) EXPECT_TRUE(is_zero(q.evaluate(x)));
    }
  }
}

TEST(ProjectiveSpanDim, Cases) {
  auto gr = grassmannian_quadrics(QQ);
  EXPECT_EQ(projective_span_dim<RationalField>({gr}), 4);
  EXPECT_EQ(projective_span_dim<RationalField>({gr, translate_quadric_space(QQ, identity(QQ, 10))}), 4);
  EXPECT_THROW(projective_span_dim<RationalField>({}), std::invalid_argument);
  PrimeField f(10007);
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    auto g = random_invertible(f, 10, rng);
    EXPECT_EQ(projective_span_dim<PrimeField>({grassmannian_quadrics(f), translate_quadric_space(f, g)}), 9);
  }
}

TEST(CommonSingularVector, Cases) {
  auto q5 = plucker_quadric(QQ, unit(QQ, 5));
  auto q4 = plucker_quadric(QQ, unit(QQ, 4));
  auto same = common_singular_vector(q5, q5);
  ASSERT_TRUE(same.has_value());
  EXPECT_TRUE(q5.kernel().contains(*same));
  auto c = common_singular_vector(q4, q5);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(equal(*c, e2(QQ, 4, 5)));
  // Oracle: solve the 20 stacked linear conditions A4 x = 0, A5 x = 0 directly.
  Matrix<Rational> stacked(20, 10);
  stacked << q4.matrix(), q5.matrix();
  EXPECT_EQ(kernel_basis(QQ, stacked), Subspace<Rational>::span(QQ, Matrix<Rational>(e2(QQ, 4, 5).transpose())));
  EXPECT_EQ(intersect(q4.kernel(), q5.kernel()), kernel_basis(QQ, stacked));

  PrimeField f(10007);
  Rng rng(9);
  int absent = 0;
  for (int t = 0; t < 20; ++t) {
    auto g = random_invertible(f, 10, rng);
    auto q1 = plucker_quadric(f, random_nonzero_vector(f, 5, rng));
    auto tr = translate_quadric_space(f, g);
    Quadric<PrimeField> q2 = f.random(rng) * tr.members()[0];
    for (int i = 1; i < 5; ++i) q2 = q2 + f.random(rng) * tr.members()[i];
    if (!common_singular_vector(q1, q2).has_value()) ++absent;
  }
  EXPECT_EQ(absent, 20);
}

TEST(Pencil, E4E5OverF7) {
  PrimeField f(7);
  auto q4 = plucker_quadric(f, unit(f, 4));
  auto q5 = plucker_quadric(f, unit(f, 5));
  auto profile = pencil_corank_profile(q4, q5);
  ASSERT_EQ(profile.size(), 8u);
  for (const auto& pt : profile) EXPECT_EQ(pt.corank, 4);
  auto c = check_pencil_criterion(q4, q5);
  EXPECT_TRUE(c.hypothesis);
  EXPECT_EQ(c.top_three_sum, 12);
  EXPECT_TRUE(c.has_common_singular_point);
  EXPECT_TRUE(c.consistent());
}

TEST(Pencil, RandomFullRankPencilsNoFalsePositives) {
  PrimeField f(7);
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    auto sym = [&]() {
      for (;;) {
        Matrix<Fp> a = random_matrix(f, 10, 10, rng);
        Matrix<Fp> s = a + a.transpose();
        if (rank(s) == 10) return Quadric<PrimeField>(f, s);
      }
    };
    auto q1 = sym(), q2 = sym();
    auto c = check_pencil_criterion(q1, q2);
    EXPECT_FALSE(c.hypothesis) << "trial " << t << " corank sum " << c.top_three_sum;
    EXPECT_TRUE(c.consistent());
  }
}

TEST(Pencil, ProportionalRejected) {
  PrimeField f(7);
  auto q = plucker_quadric(f, unit(f, 2));
  EXPECT_THROW(pencil_corank_profile(f.from_int(2) * q, q), std::invalid_argument);
}

TEST(Pencil, ConstructedDegeneratePencilsSatisfyCriterion) {
  // Pencils with large forced common kernel: both quadrics vanish on a shared
  // subspace K, so the coranks are all >= dim K.
  PrimeField f(7);
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const int k = 2 + t % 3;
    auto p = random_invertible(f, 10, rng);
    auto block = [&]() {
      Matrix<Fp> a = zeros(f, 10, 10);
      Matrix<Fp> r = random_matrix(f, 10 - k, 10 - k, rng);
      a.bottomRightCorner(10 - k, 10 - k) = r + r.transpose();
      return Quadric<PrimeField>(f, Matrix<Fp>(p.transpose() * a * p));
    };
    auto q1 = block(), q2 = block();
    if (QuadricSpace<PrimeField>::coefficient_rank({q1, q2}) < 2) continue;
    auto c = check_pencil_criterion(q1, q2);
    EXPECT_TRUE(c.has_common_singular_point);
    EXPECT_TRUE(c.consistent());
  }
}

TEST(PsiHyperplane, CoordinateW) {
  auto w = Subspace<Rational>::span(QQ, from_ints(QQ, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  auto h = psi_hyperplane(w);
  EXPECT_EQ(h, KVector<RationalField>::basis(QQ, IndexTuple::of({4, 5}), Variance::Covector));
  auto w2 = Subspace<Rational>::span(QQ, from_ints(QQ, {{1, 1, 0, 0, 0}, {0, 1, 2, 0, 0}, {3, 0, 1, 0, 0}}));
  EXPECT_EQ(psi_hyperplane(w2), h);
  EXPECT_THROW(psi_hyperplane(Subspace<Rational>::span(QQ, from_ints(QQ, {{1, 0, 0, 0, 0}}))), std::invalid_argument);
}

TEST(PsiHyperplane, BasisChangeGivesProportionalHyperplane) {
  PrimeField f(10007);
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    Matrix<Fp> basis = random_invertible(f, 5, rng).topRows(3);
    auto h1 = psi_hyperplane(Subspace<Fp>::span(f, basis));
    auto h2 = psi_hyperplane(Subspace<Fp>::span(f, Matrix<Fp>(random_invertible(f, 3, rng) * basis)));
    EXPECT_EQ(rank(Matrix<Fp>((Matrix<Fp>(2, 10) << h1.coords().transpose(), h2.coords().transpose()).finished())), 1);
  }
}
