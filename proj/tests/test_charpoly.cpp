#include <gtest/gtest.h>

#include <limits>

#include <nlohmann/json.hpp>

#include "beauville/charpoly.hpp"
#include "support/generators.hpp"

namespace beauville {
namespace {

using testing::Gen;

constexpr int kTrials = 400;

TEST(Character, ReducesModFive) {
  EXPECT_EQ(Character(9, -1), Character(4, 4));
  EXPECT_EQ(Character(5, 10), Character::trivial());
  EXPECT_EQ(Character(9, 9).to_string(), "[4,4]");
  EXPECT_EQ(GroupElement(1, 2).to_string(), "e1+2e2");
  EXPECT_EQ(GroupElement(0, 0).to_string(), "0");
}

TEST(Character, HalfIsSquareRoot) {
  for (const Character chi : Character::all()) EXPECT_EQ(2 * half(chi), chi);
  EXPECT_EQ(half(Character(1, 1)), Character(3, 3));
  EXPECT_EQ(half(Character(1, 4)), Character(3, 2));
}

TEST(Character, PairingIsBilinear) {
  Gen gen(11);
  for (int t = 0; t < kTrials; ++t) {
    const Character a = gen.character();
    const Character b = gen.character();
    const GroupElement g = gen.group_element();
    EXPECT_EQ(pairing(a + b, g), (pairing(a, g) + pairing(b, g)) % 5);
  }
}

TEST(CharPoly, CanonicalText) {
  EXPECT_EQ(to_string(GradedCharPoly(2)), "0");
  EXPECT_EQ(to_string(parse_charpoly("3q+3")), "3+3q");
  EXPECT_EQ(to_string(parse_charpoly("q x^4 y^4")), "q*x^4*y^4");
  EXPECT_EQ(to_string(parse_charpoly("x^7")), "x^2");
  EXPECT_EQ(to_string(parse_charpoly("x^5 - 1")), "0");
}

TEST(CharPoly, ParseErrorsCarryPosition) {
  try {
    parse_charpoly("1+x^");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_charpoly("1+z"), ParseError);
  EXPECT_THROW(parse_charpoly(""), ParseError);
}

TEST(CharPoly, DegreeBoundIsEnforced) {
  EXPECT_THROW(parse_charpoly("q^2", 1), DegreeBoundError);
  EXPECT_THROW(parse_charpoly("q").with_q_bound(0), DegreeBoundError);
  const auto p = parse_charpoly("q", 1);
  EXPECT_THROW(mul(p, p, 1), DegreeBoundError);
  EXPECT_EQ(mul(p, p, 2), parse_charpoly("q^2", 2));
}

TEST(CharPoly, OverflowIsDetected) {
  const auto big = GradedCharPoly::constant(0, std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW(big + big, ArithmeticOverflow);
  EXPECT_THROW(big * big, ArithmeticOverflow);
}

TEST(CharPolyProperty, RingLaws) {
  Gen gen(20240501);
  for (int t = 0; t < kTrials; ++t) {
    const auto p = gen.poly(1);
    const auto r = gen.poly(1);
    const auto s = gen.poly(1);
    EXPECT_EQ(p + r, r + p);
    EXPECT_EQ((p + r) + s, p + (r + s));
    EXPECT_EQ(p * r, r * p);
    EXPECT_EQ((p * r) * s, p * (r * s));
    EXPECT_EQ(p * (r + s), p * r + p * s);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p * GradedCharPoly::constant(0, 1), p);
  }
}

TEST(CharPolyProperty, DualIsInvolutiveRingHomomorphism) {
  Gen gen(7);
  for (int t = 0; t < kTrials; ++t) {
    const auto p = gen.poly(2);
    const auto r = gen.poly(1);
    EXPECT_EQ(dual(dual(p)), p);
    EXPECT_EQ(dual(p + r), dual(p) + dual(r));
    EXPECT_EQ(dual(p * r), dual(p) * dual(r));
    EXPECT_EQ(p.dims_by_degree(), dual(p).dims_by_degree());
  }
}

TEST(CharPolyProperty, TwistIsMultiplicationByMonomial) {
  Gen gen(8);
  for (int t = 0; t < kTrials; ++t) {
    const auto p = gen.poly(1);
    const Character chi = gen.character();
    EXPECT_EQ(twist(p, chi), mul(p, GradedCharPoly::monomial(0, 0, chi), 1));
    EXPECT_EQ(twist(twist(p, chi), -chi), p);
  }
}

TEST(CharPolyProperty, AutomorphicSubstitutionPermutesSupport) {
  Gen gen(9);
  for (int t = 0; t < kTrials; ++t) {
    const Character ix = gen.character();
    const Character iy = gen.character();
    const bool invertible = (ix.i() * iy.j() - ix.j() * iy.i()) % 5 != 0;
    if (!invertible) continue;
    const auto p = gen.poly(1);
    const auto image = substitute(p, ix, iy);
    EXPECT_EQ(image.terms().size(), p.terms().size());
    EXPECT_EQ(image.dims_by_degree(), p.dims_by_degree());
    for (const auto& [m, c] : p.terms()) {
      const Character moved = m.chi.i() * ix + m.chi.j() * iy;
      EXPECT_EQ(image.coefficient(m.q_degree, moved), c);
    }
  }
}

TEST(CharPolyProperty, SubstitutionIsRingHomomorphism) {
  Gen gen(10);
  for (int t = 0; t < kTrials; ++t) {
    const Character ix = gen.character();
    const Character iy = gen.character();
    const auto p = gen.poly(1);
    const auto r = gen.poly(1);
    EXPECT_EQ(substitute(p * r, ix, iy), substitute(p, ix, iy) * substitute(r, ix, iy));
  }
}

TEST(CharPolyProperty, TextAndJsonRoundTrip) {
  Gen gen(12);
  for (int t = 0; t < kTrials; ++t) {
    const int bound = gen.integer(0, 3);
    const auto p = gen.poly(bound);
    EXPECT_EQ(parse_charpoly(to_string(p), bound), p);
    EXPECT_EQ(charpoly_from_json(to_json(p)), p);
    EXPECT_EQ(charpoly_from_json(nlohmann::json::parse(to_json(p).dump())), p);
  }
}

}  // namespace
}  // namespace beauville
