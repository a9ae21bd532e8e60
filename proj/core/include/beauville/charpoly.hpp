#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "beauville/character.hpp"

namespace beauville {

/// Raised when an exact coefficient computation would leave the int64 range.
class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when a term exceeds the polynomial's declared q-degree bound.
class DegreeBoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the text and JSON readers; `position` is a 0-based offset into
/// the input (0 for JSON structure errors).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Monomial q^q_degree * x^i * y^j. Ordered by q, then i, then j.
struct Monomial {
  int q_degree = 0;
  Character chi;

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Element of Z[q,x,y]/(x^5-1, y^5-1) with q-degree at most q_bound: the class
/// [W] of a Z+-graded representation of (Z/5)^2. The coefficient map never
/// stores zeros, so two polynomials are equal iff their maps and bounds agree.
class GradedCharPoly {
 public:
  using Coefficient = std::int64_t;
  using TermMap = std::map<Monomial, Coefficient>;

  explicit GradedCharPoly(int q_bound = 0);
  GradedCharPoly(int q_bound, const TermMap& terms);

  static GradedCharPoly monomial(int q_bound, int q_degree, Character chi, Coefficient c = 1);
  static GradedCharPoly constant(int q_bound, Coefficient c);

  int q_bound() const { return q_bound_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(int q_degree, Character chi) const;
  std::set<Character> character_support() const;
  /// Total dimension per q-degree (evaluation at x = y = 1); length q_bound + 1.
  std::vector<Coefficient> dims_by_degree() const;

  /// Terms of a single q-degree, kept at the same bound.
  GradedCharPoly degree_part(int q_degree) const;
  /// Same terms, new bound. Throws DegreeBoundError if a term would not fit.
  GradedCharPoly with_q_bound(int q_bound) const;
  /// Multiplies by q^shift, raising the bound by the same amount.
  GradedCharPoly shift_degree(int shift) const;

  friend bool operator==(const GradedCharPoly&, const GradedCharPoly&) = default;

 private:
  void accumulate(const Monomial& m, Coefficient c);

  int q_bound_;
  TermMap terms_;

  friend GradedCharPoly add(const GradedCharPoly&, const GradedCharPoly&);
  friend GradedCharPoly mul(const GradedCharPoly&, const GradedCharPoly&, std::optional<int>);
  friend GradedCharPoly negate(const GradedCharPoly&);
};

GradedCharPoly add(const GradedCharPoly& p, const GradedCharPoly& r);
GradedCharPoly negate(const GradedCharPoly& p);
/// Convolution product; q_bound defaults to the sum of the input bounds.
GradedCharPoly mul(const GradedCharPoly& p, const GradedCharPoly& r,
                   std::optional<int> q_bound = std::nullopt);

inline GradedCharPoly operator+(const GradedCharPoly& p, const GradedCharPoly& r) { return add(p, r); }
inline GradedCharPoly operator-(const GradedCharPoly& p) { return negate(p); }
inline GradedCharPoly operator-(const GradedCharPoly& p, const GradedCharPoly& r) {
  return add(p, negate(r));
}
inline GradedCharPoly operator*(const GradedCharPoly& p, const GradedCharPoly& r) { return mul(p, r); }

/// [W*]: x -> x^4, y -> y^4. The q-grading is left alone.
GradedCharPoly dual(const GradedCharPoly& p);

/// Ring endomorphism sending x to the monomial `image_of_x` and y to `image_of_y`.
GradedCharPoly substitute(const GradedCharPoly& p, Character image_of_x, Character image_of_y);

/// [W[chi]] = [W] * x^i y^j.
GradedCharPoly twist(const GradedCharPoly& p, Character chi);

/// Canonical text form, e.g. "3+3q", "q*x^4*y^4", "1+x+y-x^2*y". Zero is "0".
std::string to_string(const GradedCharPoly& p);

/// Reads the text form. Accepts terms in any order, optional whitespace, an
/// optional '*' between coefficient and variables, and exponents of x, y
/// outside 0..4 (reduced mod 5). Without an explicit bound the bound is the
/// largest q-degree present.
GradedCharPoly parse_charpoly(std::string_view text, std::optional<int> q_bound = std::nullopt);

/// {"q_bound":N,"terms":[{"q":a,"x":i,"y":j,"c":n},...]} in canonical order.
nlohmann::json to_json(const GradedCharPoly& p);
GradedCharPoly charpoly_from_json(const nlohmann::json& j);

}  // namespace beauville
