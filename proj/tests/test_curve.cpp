#include <gtest/gtest.h>

#include <algorithm>

#include "beauville/curve.hpp"
#include "support/oracles.hpp"

namespace beauville {
namespace {

const CurveAction& C() { return CurveAction::fermat_c(); }
const CurveAction& Cp() { return CurveAction::fermat_c_prime(); }

GradedCharPoly from_basis(const std::vector<Character>& basis, int q_degree) {
  GradedCharPoly::TermMap terms;
  for (const Character chi : basis) terms[Monomial{q_degree, chi}] += 1;
  return GradedCharPoly(1, terms);
}

TEST(Curve, ReferenceSections) {
  EXPECT_EQ(h0_poly(C(), 0), parse_charpoly("1", 1));
  EXPECT_EQ(h0_poly(C(), 1), parse_charpoly("1+x+y", 1));
  EXPECT_EQ(h0_poly(C(), 2), parse_charpoly("1+x+y+x^2+xy+y^2", 1));
  EXPECT_EQ(h0_poly(C(), 5).dims_by_degree()[0], 20);
  // 1, X^5, Y^5 are invariant; the relation removes one of them.
  EXPECT_EQ(h0_poly(C(), 5).coefficient(0, Character::trivial()), 2);
  EXPECT_TRUE(h0_poly(C(), -1).is_zero());
}

TEST(Curve, ReferenceFirstCohomology) {
  EXPECT_EQ(h1_poly(C(), 0), parse_charpoly("qx^4y^4+qx^4y^3+qx^3y^4+qx^4y^2+qx^3y^3+qx^2y^4", 1));
  EXPECT_EQ(h1_poly(C(), 1), parse_charpoly("qx^4y^4+qx^4y^3+qx^3y^4", 1));
  EXPECT_EQ(h1_poly(C(), 2), parse_charpoly("qx^4y^4", 1));
  for (int n = 3; n <= 10; ++n) EXPECT_TRUE(h1_poly(C(), n).is_zero()) << n;
}

TEST(Curve, CanonicalAndSquareRoot) {
  EXPECT_EQ(canonical_character(C()), Character(1, 1));
  EXPECT_EQ(canonical_character(Cp()), Character(1, 4));
  EXPECT_EQ(k_character(C()), Character(3, 3));
  EXPECT_EQ(k_character(Cp()), Character(3, 2));
}

TEST(Curve, ReferenceKPolynomials) {
  EXPECT_EQ(k_cohomology_poly(C(), 1), parse_charpoly("x^4y^3+x^3y^4+x^3y^3+qx^2y^2+qx^2y+qxy^2", 1));
  EXPECT_EQ(k_cohomology_poly(Cp(), 1), parse_charpoly("x^3y^2+y^3+x^2+qx^3+qy^2+qx^2y^3", 1));
  EXPECT_EQ(k_cohomology_poly(C(), 2), parse_charpoly("x^3y+x^2y^2+xy^3+x^2y+xy^2+xy+q", 1));
  EXPECT_EQ(k_cohomology_poly(Cp(), 2), parse_charpoly("x^2y^3+xy^4+x^4+x^3+y^2+y+q", 1));
}

TEST(Curve, StabilizersAndFreeness) {
  using D = RamificationDivisor;
  EXPECT_EQ(stabilizer(C(), D::D1).to_string(), "<e1>");
  EXPECT_EQ(stabilizer(C(), D::D2).to_string(), "<e2>");
  EXPECT_EQ(stabilizer(C(), D::D3).to_string(), "<e1+e2>");
  EXPECT_EQ(stabilizer(Cp(), D::D1).to_string(), "<e1+2e2>");
  EXPECT_EQ(stabilizer(Cp(), D::D2).to_string(), "<e1+3e2>");
  EXPECT_EQ(stabilizer(Cp(), D::D3).to_string(), "<e1+4e2>");
  EXPECT_TRUE(diagonal_action_is_free(C(), Cp()));
  EXPECT_FALSE(diagonal_action_is_free(C(), C()));
}

TEST(Curve, UnfaithfulActionRejected) {
  EXPECT_THROW(CurveAction("bad", {{{1, 1, 1}, {0, 1, 0}}}), std::invalid_argument);
  EXPECT_EQ(&CurveAction::by_name("C'"), &Cp());
  EXPECT_THROW(CurveAction::by_name("D"), std::invalid_argument);
}

class CurveRange : public ::testing::TestWithParam<int> {};

TEST_P(CurveRange, SectionsMatchMonomialOracle) {
  const int n = GetParam();
  for (const CurveAction* curve : {&C(), &Cp()}) {
    EXPECT_EQ(h0_poly(*curve, n), from_basis(testing::oracle_h0_basis(*curve, n), 0)) << curve->name() << " n=" << n;
    EXPECT_EQ(h1_poly(*curve, n), from_basis(testing::oracle_h1_basis(*curve, n), 1)) << curve->name() << " n=" << n;
  }
}

TEST_P(CurveRange, RiemannRoch) {
  const int n = GetParam();
  for (const CurveAction* curve : {&C(), &Cp()}) {
    const auto dims = cohomology_poly(*curve, n, {}).dims_by_degree();
    EXPECT_EQ(dims[0] - dims[1], 5 * n - 5) << curve->name() << " n=" << n;
  }
}

TEST_P(CurveRange, SubstitutionLaw) {
  const int n = GetParam();
  EXPECT_EQ(substitute(cohomology_poly(C(), n, {}), Character(2, 1), Character(4, 3)), cohomology_poly(Cp(), n, {}));
}

TEST_P(CurveRange, SerreSymmetryOfSquareRoots) {
  const int m = GetParam();
  for (const CurveAction* curve : {&C(), &Cp()}) {
    const auto h1 = k_cohomology_poly(*curve, m).degree_part(1);
    const auto h0_dual = dual(k_cohomology_poly(*curve, 2 - m).degree_part(0)).shift_degree(1).with_q_bound(1);
    EXPECT_EQ(h1, h0_dual) << curve->name() << " m=" << m;
  }
}

TEST_P(CurveRange, TwistCommutesWithCohomology) {
  const int n = GetParam();
  for (const Character chi : Character::all()) {
    EXPECT_EQ(cohomology_poly(C(), n, chi), twist(cohomology_poly(C(), n, {}), chi));
  }
}

INSTANTIATE_TEST_SUITE_P(AllDegrees, CurveRange, ::testing::Range(-10, 11));

TEST(CurveFaults, EachFaultChangesSomething) {
  FaultPlan canonical;
  canonical.negate_canonical_character = true;
  EXPECT_NE(h1_poly(C(), 1, canonical), h1_poly(C(), 1));
  FaultPlan restriction;
  restriction.shift_restriction_degree = true;
  EXPECT_NE(h0_poly(C(), 5, restriction), h0_poly(C(), 5));
  EXPECT_EQ(h0_poly(C(), 4, restriction), h0_poly(C(), 4));
}

}  // namespace
}  // namespace beauville
