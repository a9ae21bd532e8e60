#pragma once

// Independent reference computations. None of these go through
// GradedCharPoly: they enumerate monomials and count invariants directly.

#include <array>
#include <vector>

#include "beauville/collections.hpp"

namespace beauville::testing {

/// Characters of a monomial basis of H^0(C, O(n)) for the Fermat quintic:
/// modulo X^5 + Y^5 + Z^5 the monomials X^i Y^j Z^k with i < 5 form a basis.
inline std::vector<Character> oracle_h0_basis(const CurveAction& curve, int n) {
  std::vector<Character> out;
  for (int i = 0; i <= n && i < 5; ++i) {
    for (int j = 0; i + j <= n; ++j) out.push_back(curve.monomial_character(i, j, n - i - j));
  }
  return out;
}

/// H^1(C, O(n)) = H^0(C, O(2-n) (x) omega_C)^*. A character psi of
/// H^0(O(2-n)) gives -(psi + det V*) in H^1(O(n)).
inline std::vector<Character> oracle_h1_basis(const CurveAction& curve, int n) {
  const Character det = curve.coordinate_character(Coordinate::X) + curve.coordinate_character(Coordinate::Y) +
                        curve.coordinate_character(Coordinate::Z);
  std::vector<Character> out;
  for (const Character psi : oracle_h0_basis(curve, 2 - n)) out.push_back(-(psi + det));
  return out;
}

/// h^p(S, O(a,b)[chi]) by counting invariant products of basis vectors.
inline CohomologyRanks oracle_o_cohomology(int a, int b, Character chi) {
  const CurveAction& c = CurveAction::fermat_c();
  const CurveAction& cp = CurveAction::fermat_c_prime();
  const std::array<std::vector<Character>, 2> first = {oracle_h0_basis(c, a), oracle_h1_basis(c, a)};
  const std::array<std::vector<Character>, 2> second = {oracle_h0_basis(cp, b), oracle_h1_basis(cp, b)};
  std::array<long long, 3> h{};
  for (int p1 = 0; p1 < 2; ++p1) {
    for (int p2 = 0; p2 < 2; ++p2) {
      for (const Character u : first[static_cast<std::size_t>(p1)]) {
        for (const Character v : second[static_cast<std::size_t>(p2)]) {
          if ((u + v + chi).is_zero()) ++h[static_cast<std::size_t>(p1 + p2)];
        }
      }
    }
  }
  return {h[0], h[1], h[2]};
}

/// K(a,b)[chi] = O(a,b)[chi + a*[3,3] + b*[3,2]], using the known square roots
/// K_C(1) = O(1)[3,3] and K_C'(1) = O(1)[3,2] rather than the engine's.
inline CohomologyRanks oracle_k_cohomology(int a, int b, Character chi) {
  return oracle_o_cohomology(a, b, chi + a * Character(3, 3) + b * Character(3, 2));
}

inline CohomologyRanks oracle_cohomology(const LineBundleClass& l) {
  return l.basis == Basis::O ? oracle_o_cohomology(l.a, l.b, l.chi) : oracle_k_cohomology(l.a, l.b, l.chi);
}

/// Ext^*(E_j, E_i) = 0 for j > i, on K-basis entries.
inline bool oracle_exceptional(const Collection& c) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto& ei = c.entries[i];
      const auto& ej = c.entries[j];
      if (!oracle_k_cohomology(ei.a - ej.a, ei.b - ej.b, ei.chi - ej.chi).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace beauville::testing
