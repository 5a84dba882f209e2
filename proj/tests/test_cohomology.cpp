#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "naive_coboundary.hpp"

using namespace lya;

namespace {

Cochain random_cochain(std::mt19937_64& gen, cochain_layout L) { return {L, fx::random_vector(gen, L.dim())}; }

}  // namespace

class ComplexFixture : public ::testing::TestWithParam<const char*> {};

TEST_P(ComplexFixture, RowAssemblyMatchesFunctionalFormula) {
  TComplex cx(fx::op(GetParam()));
  std::mt19937_64 gen(5);
  for (std::size_t p = 1; p <= 3; ++p) {
    for (int trial = 0; trial < 2; ++trial) {
      Cochain c = random_cochain(gen, cx.layout(p));
      Vector fast = cx.coboundary(p) * c.coords;
      Vector slow = naive::coboundary(cx.rep(), c);
      EXPECT_EQ(fast, slow) << "degree " << p;
    }
  }
}

TEST_P(ComplexFixture, CompositesVanish) {
  TComplex cx(fx::op(GetParam()));
  EXPECT_TRUE((cx.coboundary(1) * cx.coboundary(0)).is_zero());
  EXPECT_TRUE((cx.coboundary(2) * cx.coboundary(1)).is_zero());
  EXPECT_TRUE((cx.coboundary(3) * cx.coboundary(2)).is_zero());
}

TEST_P(ComplexFixture, InducedRepresentationAndClosedFormD) {
  RRBOperator op = fx::op(GetParam());
  RepAction r = induced_rep(op);
  EXPECT_TRUE(check_representation(r).passed());
  EXPECT_TRUE(check_lemma_identities(r).passed());
  EXPECT_EQ(r.derive_D(), induced_D_formula(op));
}

TEST_P(ComplexFixture, RepresentativesSpanCohomology) {
  TComplex cx(fx::op(GetParam()));
  for (std::size_t p = 1; p <= 2; ++p) {
    CohomologyDims d = cohomology_dims(cx, p);
    EXPECT_EQ(d.Z, cocycles(cx, p).dim());
    EXPECT_EQ(d.B, coboundaries(cx, p).dim());
    auto reps = cohomology_representatives(cx, p);
    EXPECT_EQ(reps.size(), d.H);
    for (const auto& v : reps) EXPECT_TRUE(is_zero(cx.coboundary(p) * v));
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, ComplexFixture, ::testing::Values("paper4_P13.json", "sl2_nilpotent.json"));

TEST(Cohomology, FrozenDimensions) {
  // Values produced by tests/oracle/yamaguti_oracle.py.
  TComplex p13(fx::op("paper4_P13.json"));
  CohomologyDims h1 = cohomology_dims(p13, 1), h2 = cohomology_dims(p13, 2);
  EXPECT_EQ(std::make_tuple(h1.Z, h1.B, h1.H), std::make_tuple(11u, 1u, 10u));
  EXPECT_EQ(std::make_tuple(h2.Z, h2.B, h2.H), std::make_tuple(62u, 5u, 57u));
  TComplex nil(fx::op("sl2_nilpotent.json"));
  h1 = cohomology_dims(nil, 1);
  h2 = cohomology_dims(nil, 2);
  EXPECT_EQ(std::make_tuple(h1.Z, h1.B, h1.H), std::make_tuple(5u, 2u, 3u));
  EXPECT_EQ(std::make_tuple(h2.Z, h2.B, h2.H), std::make_tuple(24u, 4u, 20u));
}

TEST(Cohomology, MatrixShapes) {
  TComplex cx(fx::op("paper4_P13.json"));
  EXPECT_EQ(cx.coboundary(0).rows, 16u);
  EXPECT_EQ(cx.coboundary(0).cols, 6u);
  EXPECT_EQ(cx.coboundary(1).rows, 120u);
  EXPECT_EQ(cx.coboundary(2).rows, 720u);
  EXPECT_EQ(cx.coboundary(3).rows, 4320u);
  EXPECT_EQ(cx.coboundary(3).cols, 720u);
}

TEST(Cohomology, UnverifiedOperatorIsRejected) {
  RRBOperator raw = io::load_operator(fx::path("paper4_P13.json"));
  EXPECT_THROW(TComplex{raw}, error);
  EXPECT_THROW(induced_rep(raw), error);
}

TEST(Cohomology, PushforwardCommutesWithCoboundary) {
  RRBOperator op = fx::op("paper4_P13.json");
  TComplex cx(op);
  Matrix d(4, 4);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  d(3, 3) = 2;
  ASSERT_TRUE(check_rrb_homomorphism(op, op, {d, d}).passed());
  std::mt19937_64 gen(9);
  for (std::size_t p = 1; p <= 2; ++p) {
    Cochain c = random_cochain(gen, cx.layout(p));
    Cochain lhs = pushforward_cochain({d, d}, {cx.layout(p + 1), cx.coboundary(p) * c.coords});
    Vector rhs = cx.coboundary(p) * pushforward_cochain({d, d}, c).coords;
    EXPECT_EQ(lhs.coords, rhs) << "degree " << p;
  }
  Matrix singular(4, 4);
  EXPECT_THROW(pushforward_matrix(d, singular, 1), error);
}

TEST(Cohomology, DegreeZeroMapIsLinear) {
  RRBOperator op = fx::op("paper4_P13.json");
  std::mt19937_64 gen(2);
  Vector X = fx::random_vector(gen, 6), Y = fx::random_vector(gen, 6);
  EXPECT_EQ(zero_cochain_map(op, X + Y).coords, zero_cochain_map(op, X).coords + zero_cochain_map(op, Y).coords);
  EXPECT_THROW(zero_cochain_map(op, Vector(5)), error);
}

TEST(Cohomology, CochainCoordinatesRoundTrip) {
  std::mt19937_64 gen(4);
  Matrix F = fx::random_matrix(gen, 4, 3);
  EXPECT_EQ(from_cochain_coords(to_cochain_coords(F), 4, 3), F);
}

TEST(Cochain, PairBasisIndexing) {
  pair_basis pb(4);
  EXPECT_EQ(pb.size(), 6u);
  for (std::size_t k = 0; k < pb.size(); ++k) EXPECT_EQ(pb.index(pb[k].first, pb[k].second), k);
  EXPECT_EQ(pb.wedge(2, 1).first, -1);
  EXPECT_EQ(pb.wedge(1, 1).first, 0);
}
