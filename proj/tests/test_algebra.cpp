#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace lya;

TEST(Algebra, PaperFixtureSatisfiesAxioms) {
  LYAlgebra a = fx::algebra("paper4.json");
  Report r = verify(a);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(a.verified());
  EXPECT_EQ(a.bracket2(unit(4, 0), unit(4, 1)), Rational(2) * unit(4, 3));
  EXPECT_EQ(a.bracket3(unit(4, 0), unit(4, 1), unit(4, 0)), unit(4, 3));
  EXPECT_EQ(a.bracket3(unit(4, 1), unit(4, 0), unit(4, 0)), -unit(4, 3));
}

TEST(Algebra, PaperFixtureCenterAndDerivedSpans) {
  LYAlgebra a = fx::algebra("paper4.json");
  EXPECT_EQ(center(a), Subspace::span(4, {unit(4, 2), unit(4, 3)}));
  EXPECT_EQ(derived_algebra(a), Subspace::span(4, {unit(4, 3)}));
}

TEST(Algebra, AbelianHasFullCenter) {
  EXPECT_TRUE(check_ly_axioms(abelian(3)).passed());
  EXPECT_EQ(center(abelian(3)).dim(), 3u);
  EXPECT_EQ(center(LYAlgebra(0)).dim(), 0u);
}

TEST(Algebra, EngineeredViolationReportsWitness) {
  LYAlgebra a = fx::algebra("bad_mixed_jacobi.json");
  Report r = check_ly_axioms(a);
  ASSERT_FALSE(r.passed());
  EXPECT_FALSE(r.equation_passed("mixed_jacobi"));
  const Violation& v = r.violations().front();
  EXPECT_EQ(v.equation, "mixed_jacobi");
  EXPECT_FALSE(is_zero(v.residual));
}

TEST(Algebra, WitnessListIsCapped) {
  LYAlgebra a = fx::algebra("bad_mixed_jacobi.json");
  Report capped = check_ly_axioms(a, 1);
  EXPECT_EQ(capped.violations().size(), 1u);
  Report all = check_ly_axioms(a, Report::unlimited);
  EXPECT_GE(all.violations().size(), capped.violations().size());
  EXPECT_EQ(all.total(), all.violations().size());
}

TEST(Algebra, LieAlgebraInducesLieYamaguti) {
  LYAlgebra s = fx::algebra("sl2.json");
  LYAlgebra t = from_lie_algebra(s.binary(), "sl2");
  EXPECT_TRUE(t.verified());
  EXPECT_TRUE(same_structure(s, t));
  EXPECT_EQ(center(t).dim(), 0u);
}

TEST(Algebra, NonLieBracketIsRejected) {
  bilinear c = square_bilinear(3);
  // [e1,e2] = e3, [e1,e3] = e1: the Jacobiator on (e1,e2,e3) is e3
  auto put = [&](std::size_t i, std::size_t j, std::size_t k) {
    c.set({i, j}, k, Rational(1));
    c.set({j, i}, k, Rational(-1));
  };
  put(0, 1, 2);
  put(0, 2, 0);
  try {
    from_lie_algebra(c);
    FAIL() << "expected NotLieAlgebra";
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), "NotLieAlgebra");
  }
}

TEST(Algebra, SettersKeepAntisymmetry) {
  LYAlgebra a(3);
  a.set_binary(0, 2, 1, Rational(5));
  EXPECT_EQ(a.c(2, 0, 1), Rational(-5));
  a.set_ternary(1, 2, 0, 0, Rational(1, 2));
  EXPECT_EQ(a.d(2, 1, 0, 0), Rational(-1, 2));
  EXPECT_THROW(a.set_binary(1, 1, 0, Rational(1)), error);
}

TEST(Algebra, DirectSumOfVerifiedAlgebras) {
  LYAlgebra a = fx::algebra("paper4.json"), b = fx::algebra("sl2.json");
  verify(a);
  verify(b);
  LYAlgebra s = direct_sum(a, b);
  EXPECT_EQ(s.dim(), 7u);
  EXPECT_TRUE(check_ly_axioms(s).passed());
  EXPECT_EQ(center(s).dim(), 2u);
}

TEST(Algebra, Homomorphisms) {
  LYAlgebra a = fx::algebra("paper4.json");
  Matrix phi(4, 4);
  phi(0, 0) = 1;
  phi(1, 1) = 2;
  phi(2, 2) = 3;
  phi(3, 3) = 2;
  EXPECT_TRUE(check_homomorphism(a, a, phi).passed());
  phi(3, 3) = 4;
  Report r = check_homomorphism(a, a, phi);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.equation_passed("preserves_binary"));
  // e1 -> e1 + g e2 is also an automorphism
  Matrix shear = Matrix::identity(4);
  shear(1, 0) = Rational(3, 2);
  EXPECT_TRUE(check_homomorphism(a, a, shear).passed());
}
