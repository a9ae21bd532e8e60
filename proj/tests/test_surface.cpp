#include <gtest/gtest.h>

#include <map>
#include <utility>

#include "beauville/surface.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace beauville {
namespace {

using testing::Gen;

const Surface& S() { return Surface::beauville(); }

// Every printed cell of the K(i,j) rank table, keyed by (i, j).
const std::map<std::pair<int, int>, std::string>& printed_table() {
  static const std::map<std::pair<int, int>, std::string> cells = {
      {{1, 4}, "0"},           {{2, 4}, "3"},          {{3, 4}, "6"},        {{4, 4}, "9"},
      {{1, 3}, "3+3q"},        {{2, 3}, "3+q"},        {{3, 3}, "4"},        {{4, 3}, "6"},
      {{5, 3}, "8"},           {{1, 2}, "0"},          {{2, 2}, "q^2"},      {{3, 2}, "3+q"},
      {{4, 2}, "3"},           {{-2, 1}, "3q^2+3q"},   {{-1, 1}, "0"},       {{0, 1}, "0"},
      {{1, 1}, "0"},           {{2, 1}, "0"},          {{3, 1}, "0"},        {{4, 1}, "3+3q"},
      {{-2, 0}, "3q^2"},       {{-1, 0}, "3q^2+q"},    {{0, 0}, "1"},        {{1, 0}, "0"},
      {{-3, -1}, "8q^2"},      {{-2, -1}, "6q^2"},     {{-1, -1}, "4q^2"},   {{0, -1}, "3q^2+q"},
      {{1, -1}, "3q^2+3q"},    {{-2, -2}, "9q^2"},     {{-1, -2}, "6q^2"},   {{0, -2}, "3q^2"},
      {{1, -2}, "0"},
  };
  return cells;
}

TEST(Surface, PrintedTableReproduced) {
  ASSERT_EQ(printed_table().size(), 33u);
  for (const auto& [ij, text] : printed_table()) {
    const auto h = S().cohomology(LineBundleClass::K(ij.first, ij.second));
    EXPECT_EQ(h.to_string(), text) << "K(" << ij.first << "," << ij.second << ")";
    EXPECT_EQ(h, parse_ranks(text));
  }
}

TEST(Surface, KBasisOffsets) {
  EXPECT_EQ(S().to_O_basis(LineBundleClass::K(1, 0)), LineBundleClass::O(1, 0, Character(3, 3)));
  EXPECT_EQ(S().to_O_basis(LineBundleClass::K(0, 1)), LineBundleClass::O(0, 1, Character(3, 2)));
  EXPECT_EQ(S().canonical_class(Basis::O), LineBundleClass::O(2, 2, Character(2, 0)));
  EXPECT_EQ(S().canonical_class(Basis::K), LineBundleClass::K(2, 2));
  EXPECT_EQ(intersection(S().canonical_class(), S().canonical_class()), 8);
}

TEST(Surface, HochschildCohomology) {
  const std::array<long long, 5> expected = {1, 0, 0, 6, 9};
  EXPECT_EQ(S().hochschild_cohomology(), expected);
}

TEST(Surface, BundleGrammar) {
  EXPECT_EQ(parse_bundle("K(1,-2)"), LineBundleClass::K(1, -2));
  EXPECT_EQ(parse_bundle(" O( 2 , 2 ) [ 7 , 5 ] "), LineBundleClass::O(2, 2, Character(2, 0)));
  EXPECT_EQ(parse_bundle("K(1,1)[9,9]"), LineBundleClass::K(1, 1, Character(4, 4)));
  for (const auto& [text, pos] : std::vector<std::pair<std::string, std::size_t>>{
           {"L(1,1)", 0}, {"K(1;1)", 3}, {"K(1,1)[9,9", 10}, {"K(1,1)x", 6}, {"K(,1)", 2}}) {
    try {
      parse_bundle(text);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), pos) << text;
    }
  }
}

TEST(Surface, RankRendering) {
  EXPECT_EQ((CohomologyRanks{3, 3, 0}).to_string(), "3+3q");
  EXPECT_EQ((CohomologyRanks{0, 1, 3}).to_string(), "3q^2+q");
  EXPECT_EQ((CohomologyRanks{0, 0, 0}).to_string(), "0");
  EXPECT_EQ((CohomologyRanks{0, 1, 0}).to_string(), "q");
  EXPECT_THROW(parse_ranks("x+1"), ParseError);
}

TEST(Surface, MixedBasesAndNonFreeActions) {
  EXPECT_THROW(LineBundleClass::K(1, 0) * LineBundleClass::O(0, 1), std::invalid_argument);
  EXPECT_THROW(Surface(CurveAction::fermat_c(), CurveAction::fermat_c()), std::invalid_argument);
}

TEST(SurfaceProperty, CohomologyMatchesInvariantCountingOracle) {
  for (int a = -5; a <= 7; ++a) {
    for (int b = -5; b <= 7; ++b) {
      for (const Character chi : Character::all()) {
        for (const LineBundleClass l : {LineBundleClass::O(a, b, chi), LineBundleClass::K(a, b, chi)}) {
          ASSERT_EQ(S().cohomology(l), testing::oracle_cohomology(l)) << l.to_string();
        }
      }
    }
  }
}

TEST(SurfaceProperty, RiemannRochSerreKodairaOnDefaultRange) {
  for (int a = -5; a <= 7; ++a) {
    for (int b = -5; b <= 7; ++b) {
      for (const Character chi : Character::all()) {
        const LineBundleClass l = LineBundleClass::K(a, b, chi);
        const CohomologyRanks h = S().cohomology(l);
        EXPECT_EQ(h.euler(), (a - 1LL) * (b - 1LL)) << l.to_string();
        EXPECT_EQ(h, S().cohomology(S().serre_dual(l)).reversed()) << l.to_string();
        if (a >= 3 && b >= 3) EXPECT_EQ(h.h1 + h.h2, 0) << l.to_string();
      }
    }
  }
}

TEST(SurfaceProperty, EulerCharacteristicFromIntersections) {
  Gen gen(31);
  for (int t = 0; t < 500; ++t) {
    const LineBundleClass l = gen.bundle(-20, 20);
    const long long twice = intersection(l, l) - intersection(l, S().canonical_class());
    EXPECT_EQ(euler_char(l), 1 + twice / 2);
  }
}

TEST(SurfaceProperty, BasisChangeRoundTrips) {
  Gen gen(32);
  for (int t = 0; t < 500; ++t) {
    const LineBundleClass l = gen.bundle();
    const LineBundleClass o = S().to_O_basis(l);
    EXPECT_EQ(S().in_basis(o, l.basis), l);
    EXPECT_TRUE(S().equivalent(l, S().to_K_basis(l)));
    EXPECT_EQ(S().cohomology(l), S().cohomology(S().to_K_basis(l)));
    EXPECT_EQ(parse_bundle(l.to_string()), l);
    const LineBundleClass m = gen.bundle();
    EXPECT_TRUE(S().equivalent(S().to_O_basis(l) * S().to_O_basis(m), S().to_K_basis(l) * S().to_K_basis(m)));
  }
}

}  // namespace
}  // namespace beauville
