#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wolfkit/butterfly.hpp"
#include "wolfkit/catalog.hpp"
#include "wolfkit/certificate.hpp"
#include "wolfkit/errors.hpp"

using namespace wolfkit;

namespace {

Matrix split6() {
  Matrix f(6, 6);
  for (std::size_t i = 0; i < 3; ++i) f(i, i + 3) = f(i + 3, i) = 1;
  return f;
}

Matrix unit(std::size_t k, std::size_t i, const Rational& c = 1) {
  Matrix v(k, 1);
  v[i] = c;
  return v;
}

bool same_constants(const NilLieAlgebra& a, const NilLieAlgebra& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.bracket(i, j) != b.bracket(i, j)) return false;
  return true;
}

// omega(e_i, e_j) for the 3-form c e1* ^ e2* ^ e3*
std::vector<BracketEntry> volume_cocycle(const Rational& c) {
  return {{0, 1, unit(3, 2, c)}, {0, 2, unit(3, 1, -c)}, {1, 2, unit(3, 0, c)}};
}

}  // namespace

TEST(CanonicalB6, StructureAndForm) {
  MetricNilAlgebra b6 = canonical_b6();
  EXPECT_EQ(b6.form, split6());
  // (X, Y, Z*, X*, Y*, Z): [X,Y] = Z, [X,Z*] = -Y*, [Y,Z*] = X*
  EXPECT_EQ(b6.algebra.bracket(0, 1), unit(6, 5));
  EXPECT_EQ(b6.algebra.bracket(0, 2), unit(6, 4, -1));
  EXPECT_EQ(b6.algebra.bracket(1, 2), unit(6, 3));
  EXPECT_EQ(b6.algebra.nonzero_brackets().size(), 3u);
  EXPECT_EQ(inertia(b6.form), (Inertia{3, 3, 0}));
}

TEST(MetricAlgebra, RejectsNonInvariantForm) {
  Matrix f = split6();
  f(5, 5) = 1;
  EXPECT_THROW(make_metric_algebra(canonical_b6().algebra, f), ConsistencyError);
}

TEST(Realization, LeftTranslationsFormWolfGroup) {
  WolfRealization w = wolf_from_metric_algebra(canonical_b6());
  EXPECT_TRUE(wolf_certificate(w.left).necessary_conditions_pass());
  EXPECT_TRUE(wolf_certificate(w.right).necessary_conditions_pass());
  EXPECT_EQ(w.lattice.algebra.dim(), 6u);
}

TEST(Realization, DegenerateFormRejected) {
  EXPECT_THROW(wolf_from_metric_algebra(MetricNilAlgebra{heisenberg(), Matrix(3, 3)}), PreconditionError);
}

TEST(Cocycle, ZeroCocycleOnHeisenbergIsB6) {
  MetricNilAlgebra m = cocycle_extension(heisenberg(), {});
  EXPECT_EQ(m.algebra.dim(), 6u);
  EXPECT_EQ(inertia(m.form), (Inertia{3, 3, 0}));
  ButterflyResult b = extract_butterfly(m.algebra, m.form);
  ASSERT_TRUE(b.frame);
  EXPECT_TRUE(same_constants(b.frame->algebra, canonical_b6().algebra));
}

TEST(Cocycle, HeisenbergAdmitsOnlyZeroInSmallBox) {
  // every omega with entries in {-1, 0, 1}
  NilLieAlgebra h = heisenberg();
  std::size_t valid = 0;
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    std::vector<BracketEntry> omega;
    bool nonzero = false;
    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}}) {
      Matrix r(3, 1);
      for (std::size_t m = 0; m < 3; ++m) {
        r[m] = c % 3 - 1;
        c /= 3;
        nonzero = nonzero || r[m] != 0;
      }
      omega.push_back({i, j, r});
    }
    try {
      cocycle_extension(h, omega);
      ++valid;
      EXPECT_FALSE(nonzero) << "code " << code;
    } catch (const PreconditionError&) {
    }
  }
  EXPECT_EQ(valid, 1u);
}

TEST(Cocycle, AbelianVolumeFormIsValid) {
  MetricNilAlgebra m = cocycle_extension(NilLieAlgebra::abelian(3), volume_cocycle(2));
  EXPECT_FALSE(m.algebra.is_abelian());
  EXPECT_EQ(m.algebra.bracket(0, 1), unit(6, 5, 2));
  WolfRealization w = wolf_from_metric_algebra(m);
  EXPECT_TRUE(wolf_certificate(w.left).necessary_conditions_pass());
  ButterflyResult b = extract_butterfly(m.algebra, m.form);
  ASSERT_TRUE(b.frame);
  EXPECT_EQ(b.frame->gram, split6());
}

TEST(Cocycle, CocycleViolationReportsTriple) {
  // omega(e2, e3) = e3* on h3: d omega(e1, e2, e3) = ad*_{e1} e3* = -e2*
  try {
    cocycle_extension(heisenberg(), {{1, 2, unit(3, 2)}});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(e1, e2, e3)"), std::string::npos) << e.what();
    EXPECT_FALSE(e.witness().empty());
  }
}

TEST(Cocycle, NonInvariantExtensionRejected) {
  // omega(e1, e2) = e1*: a cocycle for abelian n, but the pairing is not invariant
  EXPECT_THROW(cocycle_extension(NilLieAlgebra::abelian(3), {{0, 1, unit(3, 0)}}), PreconditionError);
}

TEST(Butterfly, B6FrameIsIdentity) {
  MetricNilAlgebra b6 = canonical_b6();
  ButterflyResult b = extract_butterfly(b6.algebra, b6.form);
  ASSERT_TRUE(b.frame);
  EXPECT_EQ(b.frame->vectors, Matrix::identity(6));
  EXPECT_EQ(b.frame->gram, b6.form);
  EXPECT_TRUE(same_constants(b.frame->algebra, b6.algebra));
}

TEST(Butterfly, RandomRebasesCanonicalizeToB6) {
  MetricNilAlgebra b6 = canonical_b6();
  RationalSampler rng(2024);
  for (int s = 0; s < 10; ++s) {
    Matrix p = wolfkit::testing::random_invertible(rng, 6);
    NilLieAlgebra alg = b6.algebra.change_basis(p);
    Matrix form = p.transpose() * b6.form * p;
    ButterflyResult b = extract_butterfly(alg, form);
    ASSERT_TRUE(b.frame) << "rebase " << s;
    EXPECT_EQ(b.frame->gram, b6.form);
    EXPECT_TRUE(same_constants(b.frame->algebra, b6.algebra)) << "rebase " << s;
    // independent check: the frame Gram recomputed in the original basis
    Matrix in_orig = p * b.frame->vectors;
    EXPECT_EQ(in_orig.transpose() * b6.form * in_orig, b6.form);
  }
}

TEST(Butterfly, IsotropicHeisenbergHasNone) {
  NilLieAlgebra h = algebra_from_lattice(h3_isotropic().generators);
  ButterflyResult b = extract_butterfly(h, Matrix(3, 3));
  EXPECT_FALSE(b.frame);
  ASSERT_TRUE(b.reason);
  EXPECT_EQ(*b.reason, NoButterflyReason::CommutatorsInRadical);
}

TEST(Butterfly, AbelianHasNone) {
  ButterflyResult b = extract_butterfly(NilLieAlgebra::abelian(2), Matrix::identity(2));
  ASSERT_TRUE(b.reason);
  EXPECT_EQ(*b.reason, NoButterflyReason::Abelian);
}

TEST(NondegenerateAnalysis, B6) {
  NondegenerateAnalysis a = nondegenerate_analysis(b6_wolf_group().generators);
  EXPECT_FALSE(a.report.any_failed());
  EXPECT_TRUE(a.report.passed("nondegenerate"));
  EXPECT_TRUE(a.report.passed("holonomy_abelian"));
  EXPECT_TRUE(a.report.passed("dim_at_least_6"));
  EXPECT_TRUE(a.report.passed("butterfly"));
  ASSERT_TRUE(a.frame);
  EXPECT_EQ(a.butterfly_lattice.size(), 6u);
  EXPECT_EQ(a.metric.signature, (Inertia{3, 3, 0}));
}

TEST(NondegenerateAnalysis, DegenerateIsSkipped) {
  NondegenerateAnalysis a = nondegenerate_analysis(h3_isotropic().generators);
  EXPECT_EQ(a.report.find("nondegenerate")->status, Status::Skip);
  EXPECT_FALSE(a.frame);
}

TEST(NondegenerateAnalysis, TranslationsAreAbelianBranch) {
  NondegenerateAnalysis a = nondegenerate_analysis(translations(3, 1, 3).generators);
  EXPECT_TRUE(a.report.passed("holonomy_abelian"));
  EXPECT_EQ(a.report.find("butterfly")->status, Status::Skip);
}
