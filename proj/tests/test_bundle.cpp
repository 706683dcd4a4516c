#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wolfkit/bundle.hpp"
#include "wolfkit/catalog.hpp"
#include "wolfkit/errors.hpp"
#include "wolfkit/orbit.hpp"

using namespace wolfkit;

namespace {

NilLieAlgebra catalog_algebra(const std::string& name) {
  return algebra_from_lattice(lookup_catalog(name).generators);
}

Matrix act(const NilLieAlgebra& alg, const Matrix& t, const Matrix& p) {
  return exp(alg.realize(t)).apply(p);
}

}  // namespace

TEST(Beta, IdentityGivesZero) {
  NilLieAlgebra alg = catalog_algebra("b6");
  Matrix p{{1}, {2}, {3}, {4}, {5}, {6}};
  auto t = beta(p, p, alg);
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->is_zero());
}

TEST(Beta, RoundTripOnB6FromOrigin) {
  NilLieAlgebra alg = catalog_algebra("b6");
  RationalSampler rng(11);
  Matrix origin(6, 1);
  for (int s = 0; s < 100; ++s) {
    Matrix t = wolfkit::testing::random_point(rng, 6);
    auto back = beta(act(alg, t, origin), origin, alg);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, t);
  }
}

TEST(Beta, RoundTripAtRandomPoints) {
  for (const char* name : {"b6", "h3-isotropic", "translations:3,1,2"}) {
    NilLieAlgebra alg = catalog_algebra(name);
    const std::size_t n = alg.space()->dim();
    RationalSampler rng(5);
    for (int s = 0; s < 100; ++s) {
      Matrix t = wolfkit::testing::random_point(rng, alg.dim());
      Matrix p = wolfkit::testing::random_point(rng, n);
      auto back = beta(act(alg, t, p), p, alg);
      ASSERT_TRUE(back) << name;
      EXPECT_EQ(*back, t) << name;
    }
  }
}

TEST(Beta, OffOrbitIsNone) {
  NilLieAlgebra alg = catalog_algebra("translations:2,0,1");
  EXPECT_FALSE(beta(Matrix{{0}, {1}}, Matrix{{0}, {0}}, alg));
  EXPECT_TRUE(same_orbit(Matrix{{5}, {0}}, Matrix{{0}, {0}}, alg));
  EXPECT_FALSE(same_orbit(Matrix{{5}, {1}}, Matrix{{0}, {0}}, alg));
}

TEST(Beta, NonFreeActionThrows) {
  // two copies of the same translation: b_1(p) = b_2(p)
  SpacePtr s = make_space(Matrix::identity(2));
  InfinitesimalIsometry x = InfinitesimalIsometry::translation(s, Matrix{{1}, {0}});
  NilLieAlgebra alg(2, {}, std::vector<InfinitesimalIsometry>{x, x});
  EXPECT_THROW(beta(Matrix{{1}, {0}}, Matrix{{0}, {0}}, alg), PreconditionError);
}

TEST(Trivialize, TranslationLine) {
  NilLieAlgebra alg = catalog_algebra("translations:2,0,1");
  auto res = trivialize(alg);
  ASSERT_TRUE(std::holds_alternative<Trivialization>(res));
  const auto& t = std::get<Trivialization>(res);
  PolynomialMap expected_pi(2, {Polynomial::variable(2, 1)});
  PolynomialMap expected_sigma(1, {Polynomial(1), Polynomial::variable(1, 0)});
  EXPECT_EQ(t.projection, expected_pi);
  EXPECT_EQ(t.section, expected_sigma);
  EXPECT_EQ(t.projection.degree(), 1);
  ASSERT_EQ(t.history.size(), 1u);
  EXPECT_EQ(t.history[0].eliminated, 0u);
}

TEST(Trivialize, HeisenbergInsideB6) {
  NilLieAlgebra alg = catalog_algebra("h3-isotropic");
  ASSERT_EQ(alg.dim(), 3u);
  auto res = trivialize(alg);
  ASSERT_TRUE(std::holds_alternative<Trivialization>(res));
  const auto& t = std::get<Trivialization>(res);
  EXPECT_EQ(t.projection.in_vars(), 6u);
  EXPECT_EQ(t.projection.out_vars(), 3u);
  EXPECT_EQ(t.section.in_vars(), 3u);
  EXPECT_TRUE(poly_identity_zero(compose(t.projection, t.section) - PolynomialMap::identity(3)));
  EXPECT_FALSE(t.verification.any_failed());

  // independent oracle: points in one orbit project equally, a point moved
  // off the orbit along a base coordinate does not
  RationalSampler rng(99);
  for (int s = 0; s < 100; ++s) {
    Matrix p = wolfkit::testing::random_point(rng, 6);
    Matrix g = wolfkit::testing::random_point(rng, 3);
    EXPECT_EQ(t.projection.evaluate(act(alg, g, p)), t.projection.evaluate(p));
  }
}

TEST(Trivialize, FullOrbitB6HasPointBase) {
  NilLieAlgebra alg = catalog_algebra("b6");
  Matrix origin(6, 1);
  ASSERT_EQ(rank(orbit_chart(alg, origin).directions), 6u);
  auto res = trivialize(alg);
  ASSERT_TRUE(std::holds_alternative<Trivialization>(res));
  const auto& t = std::get<Trivialization>(res);
  EXPECT_EQ(t.projection.out_vars(), 0u);
  EXPECT_EQ(t.section.in_vars(), 0u);
  EXPECT_EQ(t.section.out_vars(), 6u);
  EXPECT_EQ(t.history.size(), 6u);
}

TEST(Trivialize, DeterministicOutput) {
  NilLieAlgebra alg = catalog_algebra("h3-isotropic");
  auto a = std::get<Trivialization>(trivialize(alg));
  auto b = std::get<Trivialization>(trivialize(alg));
  EXPECT_EQ(a.projection, b.projection);
  EXPECT_EQ(a.section, b.section);
}

TEST(Trivialize, RequiresAmbient) {
  EXPECT_THROW(trivialize(heisenberg()), PreconditionError);
}
