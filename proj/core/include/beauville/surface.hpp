#pragma once

#include <array>
#include <string>
#include <string_view>

#include "beauville/character.hpp"
#include "beauville/charpoly.hpp"
#include "beauville/curve.hpp"
#include "beauville/faults.hpp"

namespace beauville {

/// Which generators a bidegree refers to: O(a,b) = p1*O(a) (x) p2*O(b) or
/// K(a,b) = p1*K(a) (x) p2*K(b). The two differ by a torsion character.
enum class Basis { O, K };

/// A class in Pic(S) = Z^2 (+) Ghat, written O(a,b)[chi] or K(a,b)[chi].
///
/// Tensor products and duals stay in the basis of their operands. Equality
/// of the struct is structural (same basis, same numbers); use
/// Surface::equivalent to compare classes written in different bases.
struct LineBundleClass {
  int a = 0;
  int b = 0;
  Character chi;
  Basis basis = Basis::O;

  static LineBundleClass O(int a, int b, Character chi = {}) { return {a, b, chi, Basis::O}; }
  static LineBundleClass K(int a, int b, Character chi = {}) { return {a, b, chi, Basis::K}; }

  LineBundleClass dual() const { return {-a, -b, -chi, basis}; }
  LineBundleClass with_character(Character c) const { return {a, b, c, basis}; }

  /// "K(1,-2)" or "O(2,2)[2,0]"; the character suffix is omitted when trivial.
  std::string to_string() const;

  friend bool operator==(const LineBundleClass&, const LineBundleClass&) = default;
  friend auto operator<=>(const LineBundleClass&, const LineBundleClass&) = default;
};

/// Tensor product; throws std::invalid_argument if the bases differ.
LineBundleClass operator*(const LineBundleClass& l1, const LineBundleClass& l2);

/// Reads `O(a,b)`, `K(a,b)`, optionally followed by `[i,j]`. Integers may be
/// negative; character entries are reduced mod 5. Throws ParseError with the
/// offending position.
LineBundleClass parse_bundle(std::string_view text);

/// chi(L) = (a-1)(b-1), independent of basis and torsion.
long long euler_char(const LineBundleClass& l);

/// (O(a1,b1) . O(a2,b2)) = a1*b2 + b1*a2; torsion does not contribute.
long long intersection(const LineBundleClass& l1, const LineBundleClass& l2);

/// h^0 + q h^1 + q^2 h^2 of a line bundle on S, also used for the Ext
/// polynomials between line bundles.
struct CohomologyRanks {
  long long h0 = 0;
  long long h1 = 0;
  long long h2 = 0;

  long long euler() const { return h0 - h1 + h2; }
  bool is_zero() const { return h0 == 0 && h1 == 0 && h2 == 0; }
  CohomologyRanks reversed() const { return {h2, h1, h0}; }
  long long at(int degree) const { return degree == 0 ? h0 : degree == 1 ? h1 : degree == 2 ? h2 : 0; }
  /// Smallest p with h^p != 0, or -1 when all vanish.
  int lowest_degree() const;

  /// Table notation: ascending ("3+3q") unless h2 != 0, then descending
  /// ("3q^2+q"), the layout of the standard rank tables.
  std::string to_string() const;
  /// Trivial-character polynomial with q_bound 2.
  GradedCharPoly to_poly() const;

  friend bool operator==(const CohomologyRanks&, const CohomologyRanks&) = default;
};

/// Reads "3q^2+q", "3+3q", "0", ... Characters must be trivial.
CohomologyRanks parse_ranks(std::string_view text);

/// S = (C x C')/G for two curve actions whose diagonal action is free. Every
/// operation is const; a Surface can be shared between threads.
class Surface {
 public:
  /// Throws std::invalid_argument if the diagonal action is not free.
  Surface(CurveAction first, CurveAction second, FaultPlan faults = {});

  /// The Beauville surface built from the curves C and C'.
  static const Surface& beauville();

  const CurveAction& first_curve() const { return first_; }
  const CurveAction& second_curve() const { return second_; }
  const FaultPlan& faults() const { return faults_; }

  /// Torsion character t(a,b) with K(a,b) = O(a,b)[t(a,b)]; [3a+3b, 3a+2b]
  /// for the Beauville surface.
  Character k_offset(int a, int b) const;

  LineBundleClass to_O_basis(const LineBundleClass& l) const;
  LineBundleClass to_K_basis(const LineBundleClass& l) const;
  LineBundleClass in_basis(const LineBundleClass& l, Basis basis) const;
  /// Same class in Pic(S), compared in the O-basis.
  bool equivalent(const LineBundleClass& l1, const LineBundleClass& l2) const;

  /// [H^*(T, pi^* L)] = [H^*(C, O(a))] * [H^*(C', O(b))] * chi, with q_bound 2.
  GradedCharPoly kunneth_poly(const LineBundleClass& l) const;

  /// H^i(S, L) = H^i(T, pi^* L)^G: the trivial-character coefficients.
  CohomologyRanks cohomology(const LineBundleClass& l) const;

  /// omega_S = p1* omega_C (x) p2* omega_C', returned in the requested basis.
  LineBundleClass canonical_class(Basis basis = Basis::O) const;

  /// omega_S (x) L^*, in the basis of L.
  LineBundleClass serre_dual(const LineBundleClass& l) const;

  /// dim HH^k(S) for k = 0..4, from H^p(S, Lambda^q T_S) with
  /// T_S = K(-2,0) (+) K(0,-2) and Lambda^2 T_S = K(-2,-2).
  std::array<long long, 5> hochschild_cohomology() const;

 private:
  CurveAction first_;
  CurveAction second_;
  FaultPlan faults_;
  Character eta_first_;
  Character eta_second_;
};

/// dim H^*(S) = b0 + b2 + b4 = 1 + 2 + 1 for p_g = q = 0, b2 = 2. Cited.
inline constexpr int kTotalBettiNumber = 4;

}  // namespace beauville
