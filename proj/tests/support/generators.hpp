#pragma once

// Seeded random inputs for the property tests. Every suite constructs its
// own Gen with a fixed seed so failures reproduce exactly.

#include <cstdint>
#include <random>

#include "beauville/charpoly.hpp"
#include "beauville/collections.hpp"

namespace beauville::testing {

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Character character() { return Character(integer(0, 4), integer(0, 4)); }
  GroupElement group_element() { return GroupElement(integer(0, 4), integer(0, 4)); }

  /// Up to `max_terms` terms with coefficients in [-coef, coef].
  GradedCharPoly poly(int q_bound, int max_terms = 8, int coef = 9) {
    GradedCharPoly::TermMap terms;
    const int n = integer(0, max_terms);
    for (int k = 0; k < n; ++k) {
      const int c = integer(-coef, coef);
      if (c == 0) continue;
      terms[Monomial{integer(0, q_bound), character()}] += c;
    }
    return GradedCharPoly(q_bound, terms);
  }

  LineBundleClass bundle(int lo = -5, int hi = 7) {
    const LineBundleClass l{integer(lo, hi), integer(lo, hi), character(), coin() ? Basis::O : Basis::K};
    return l;
  }

  /// O followed by three random K-basis classes in a small box.
  Collection collection(int lo = -3, int hi = 1) {
    Collection c;
    c.entries[0] = LineBundleClass::K(0, 0);
    for (std::size_t k = 1; k < 4; ++k) c.entries[k] = LineBundleClass::K(integer(lo, hi), integer(lo, hi), character());
    return c;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace beauville::testing
