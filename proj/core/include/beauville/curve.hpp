#pragma once

#include <array>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "beauville/character.hpp"
#include "beauville/charpoly.hpp"
#include "beauville/faults.hpp"

namespace beauville {

enum class Coordinate { X = 0, Y = 1, Z = 2 };

/// A diagonal action of G = (Z/5)^2 on P^2 preserving the Fermat quintic
/// X^5 + Y^5 + Z^5. Entry (g, c) is the exponent of zeta by which generator
/// e_{g+1} scales coordinate c. Every row preserves the quintic, since any
/// exponent times 5 vanishes mod 5, so the only check is faithfulness.
class CurveAction {
 public:
  using Matrix = std::array<std::array<int, 3>, 2>;

  /// Throws std::invalid_argument if some non-zero g acts trivially on P^2.
  CurveAction(std::string name, const Matrix& exponents);

  /// e1 scales X, e2 scales Y.
  static const CurveAction& fermat_c();
  /// e1 = (zeta^2 X : zeta^4 Y : Z), e2 = (zeta X : zeta^3 Y : Z).
  static const CurveAction& fermat_c_prime();
  /// "C" or "Cprime"; throws std::invalid_argument otherwise.
  static const CurveAction& by_name(std::string_view name);

  const std::string& name() const { return name_; }
  const Matrix& exponents() const { return exponents_; }

  /// Character of the coordinate function as an element of V*.
  Character coordinate_character(Coordinate c) const;
  Character monomial_character(long long x_exp, long long y_exp, long long z_exp) const;
  /// Exponent of zeta by which g scales coordinate c.
  int scaling_exponent(GroupElement g, Coordinate c) const;

  /// The 2x3 exponent matrix as nested integer arrays.
  nlohmann::json to_json() const;

  friend bool operator==(const CurveAction& a, const CurveAction& b) {
    return a.exponents_ == b.exponents_;
  }

 private:
  std::string name_;
  Matrix exponents_{};
};

/// Orbits D1 (X = 0), D2 (Y = 0), D3 (Z = 0) where G acts non-freely.
enum class RamificationDivisor { D1 = 1, D2 = 2, D3 = 3 };

/// Cyclic subgroup of (Z/5)^2 of order 1 or 5. The stored generator is
/// normalized so its first non-zero coordinate is 1, which makes equality of
/// subgroups equality of generators.
class StabilizerSubgroup {
 public:
  StabilizerSubgroup() = default;
  explicit StabilizerSubgroup(GroupElement generator);

  GroupElement generator() const { return generator_; }
  int order() const { return generator_.is_zero() ? 1 : kGroupExponent; }
  bool contains(GroupElement g) const;

  /// "0" or "<e1+2e2>".
  std::string to_string() const;

  friend bool operator==(const StabilizerSubgroup&, const StabilizerSubgroup&) = default;

 private:
  GroupElement generator_;
};

/// [H^0(C, O(n))], supported in q-degree 0, q_bound 1. Computed from the
/// restriction sequence 0 -> O_P2(n-5) -> O_P2(n) -> O_C(n) -> 0; the
/// quintic relation is G-invariant so the subtracted part is not twisted.
GradedCharPoly h0_poly(const CurveAction& action, int n, const FaultPlan& faults = {});

/// det V*, so that omega_C = O(2)(det V*).
Character canonical_character(const CurveAction& action, const FaultPlan& faults = {});

/// [H^1(C, O(n))] in q-degree 1 via equivariant Serre duality:
/// H^1(O(n)) = H^0(O(2-n)(det V*))^*.
GradedCharPoly h1_poly(const CurveAction& action, int n, const FaultPlan& faults = {});

/// The square root eta of the canonical character; K(m) = O(m)[m*eta].
Character k_character(const CurveAction& action, const FaultPlan& faults = {});

/// [H^*(C, O(n)[chi])] = ([H^0] + [H^1]) * chi, q_bound 1.
GradedCharPoly cohomology_poly(const CurveAction& action, int n, Character chi,
                               const FaultPlan& faults = {});

/// [H^*(C, K(m))].
GradedCharPoly k_cohomology_poly(const CurveAction& action, int m, const FaultPlan& faults = {});

/// Elements fixing the points of a ramification orbit: those scaling the two
/// coordinates that do not vanish on the orbit by the same root of unity.
StabilizerSubgroup stabilizer(const CurveAction& action, RamificationDivisor divisor);

/// True iff no non-zero g fixes a point on both curves. Only ramification
/// orbits have non-trivial stabilizers, so this compares the 3x3 pairs.
bool diagonal_action_is_free(const CurveAction& first, const CurveAction& second);

}  // namespace beauville
