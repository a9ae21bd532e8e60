#include "beauville/curve.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace beauville {
namespace {

constexpr int kCurveQBound = 1;

// Characters of all degree-n monomials X^i Y^j Z^(n-i-j) on P^2.
GradedCharPoly plane_sections(const CurveAction& action, int n) {
  GradedCharPoly::TermMap terms;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      terms[Monomial{0, action.monomial_character(i, j, n - i - j)}] += 1;
    }
  }
  return GradedCharPoly(kCurveQBound, terms);
}

}  // namespace

CurveAction::CurveAction(std::string name, const Matrix& exponents) : name_(std::move(name)) {
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t c = 0; c < 3; ++c) exponents_[g][c] = mod5(exponents[g][c]);
  }
  for (const GroupElement g : GroupElement::all()) {
    if (g.is_zero()) continue;
    const int sx = scaling_exponent(g, Coordinate::X);
    if (sx == scaling_exponent(g, Coordinate::Y) && sx == scaling_exponent(g, Coordinate::Z)) {
      throw std::invalid_argument("action " + name_ + " is not faithful: " + g.to_string() +
                                  " acts trivially on P^2");
    }
  }
}

const CurveAction& CurveAction::fermat_c() {
  static const CurveAction action("C", {{{1, 0, 0}, {0, 1, 0}}});
  return action;
}

const CurveAction& CurveAction::fermat_c_prime() {
  static const CurveAction action("Cprime", {{{2, 4, 0}, {1, 3, 0}}});
  return action;
}

const CurveAction& CurveAction::by_name(std::string_view name) {
  if (name == "C") return fermat_c();
  if (name == "Cprime" || name == "C'") return fermat_c_prime();
  throw std::invalid_argument("unknown curve action '" + std::string(name) + "' (expected C or Cprime)");
}

Character CurveAction::coordinate_character(Coordinate c) const {
  const auto col = static_cast<std::size_t>(c);
  return {exponents_[0][col], exponents_[1][col]};
}

Character CurveAction::monomial_character(long long x_exp, long long y_exp, long long z_exp) const {
  return x_exp * coordinate_character(Coordinate::X) + y_exp * coordinate_character(Coordinate::Y) +
         z_exp * coordinate_character(Coordinate::Z);
}

int CurveAction::scaling_exponent(GroupElement g, Coordinate c) const {
  const auto col = static_cast<std::size_t>(c);
  return mod5(g.a() * exponents_[0][col] + g.b() * exponents_[1][col]);
}

nlohmann::json CurveAction::to_json() const {
  return nlohmann::json::array({exponents_[0], exponents_[1]});
}

StabilizerSubgroup::StabilizerSubgroup(GroupElement generator) {
  if (generator.is_zero()) return;
  const int lead = generator.a() != 0 ? generator.a() : generator.b();
  // Inverses mod 5: 1->1, 2->3, 3->2, 4->4.
  constexpr int kInverse[] = {0, 1, 3, 2, 4};
  generator_ = kInverse[lead] * generator;
}

bool StabilizerSubgroup::contains(GroupElement g) const {
  for (int k = 0; k < order(); ++k) {
    if (k * generator_ == g) return true;
  }
  return false;
}

std::string StabilizerSubgroup::to_string() const {
  return generator_.is_zero() ? "0" : "<" + generator_.to_string() + ">";
}

GradedCharPoly h0_poly(const CurveAction& action, int n, const FaultPlan& faults) {
  if (n < 0) return GradedCharPoly(kCurveQBound);
  const int relation_degree = faults.shift_restriction_degree ? 6 : 5;
  GradedCharPoly sections = plane_sections(action, n);
  if (n >= relation_degree) sections = sections - plane_sections(action, n - relation_degree);
  return sections;
}

Character canonical_character(const CurveAction& action, const FaultPlan& faults) {
  const Character det = action.coordinate_character(Coordinate::X) +
                        action.coordinate_character(Coordinate::Y) +
                        action.coordinate_character(Coordinate::Z);
  return faults.negate_canonical_character ? -det : det;
}

GradedCharPoly h1_poly(const CurveAction& action, int n, const FaultPlan& faults) {
  const GradedCharPoly sections = twist(h0_poly(action, 2 - n, faults), canonical_character(action, faults));
  return dual(sections).degree_part(0).shift_degree(1).with_q_bound(kCurveQBound);
}

Character k_character(const CurveAction& action, const FaultPlan& faults) {
  return half(canonical_character(action, faults));
}

GradedCharPoly cohomology_poly(const CurveAction& action, int n, Character chi, const FaultPlan& faults) {
  return twist(h0_poly(action, n, faults) + h1_poly(action, n, faults), chi);
}

GradedCharPoly k_cohomology_poly(const CurveAction& action, int m, const FaultPlan& faults) {
  return cohomology_poly(action, m, m * k_character(action, faults), faults);
}

StabilizerSubgroup stabilizer(const CurveAction& action, RamificationDivisor divisor) {
  Coordinate first = Coordinate::Y;
  Coordinate second = Coordinate::Z;
  if (divisor == RamificationDivisor::D2) first = Coordinate::X;
  if (divisor == RamificationDivisor::D3) {
    first = Coordinate::X;
    second = Coordinate::Y;
  }
  for (const GroupElement g : GroupElement::all()) {
    if (!g.is_zero() && action.scaling_exponent(g, first) == action.scaling_exponent(g, second)) {
      return StabilizerSubgroup(g);
    }
  }
  return StabilizerSubgroup();
}

bool diagonal_action_is_free(const CurveAction& first, const CurveAction& second) {
  constexpr RamificationDivisor kDivisors[] = {RamificationDivisor::D1, RamificationDivisor::D2,
                                               RamificationDivisor::D3};
  for (const auto d1 : kDivisors) {
    const StabilizerSubgroup s1 = stabilizer(first, d1);
    for (const auto d2 : kDivisors) {
      const StabilizerSubgroup s2 = stabilizer(second, d2);
      for (const GroupElement g : GroupElement::all()) {
        if (!g.is_zero() && s1.contains(g) && s2.contains(g)) return false;
      }
    }
  }
  return true;
}

}  // namespace beauville
