#include "beauville/charpoly.hpp"

#include <cctype>
#include <limits>

#include <nlohmann/json.hpp>

namespace beauville {
namespace {

using Coefficient = GradedCharPoly::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("coefficient overflow in addition: " + std::to_string(a) + " + " +
                             std::to_string(b));
  }
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("coefficient overflow in product: " + std::to_string(a) + " * " +
                             std::to_string(b));
  }
  return out;
}

Coefficient checked_negate(Coefficient a) {
  if (a == std::numeric_limits<Coefficient>::min()) {
    throw ArithmeticOverflow("coefficient overflow in negation");
  }
  return -a;
}

void require_bound(int q_bound) {
  if (q_bound < 0) throw DegreeBoundError("q_bound must be non-negative");
}

// Recursive-descent reader for the text form.
class PolyReader {
 public:
  PolyReader(std::string_view text, std::optional<int> q_bound) : text_(text), bound_(q_bound) {}

  GradedCharPoly read() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(pos_, std::string("expected '+' or '-' but found '") + peek() + "'");
      }
      read_term(sign);
      first = false;
      skip_ws();
    }
    int bound = bound_.value_or(max_q_);
    GradedCharPoly::TermMap terms;
    for (const auto& [m, c] : acc_) {
      if (c == 0) continue;
      if (m.q_degree > bound) {
        throw DegreeBoundError("term of q-degree " + std::to_string(m.q_degree) +
                               " exceeds bound " + std::to_string(bound));
      }
      terms.emplace(m, c);
    }
    return GradedCharPoly(bound, terms);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Coefficient read_integer() {
    const std::size_t start = pos_;
    Coefficient value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = checked_add(checked_mul(value, 10), peek() - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected an integer");
    return value;
  }

  static bool is_variable(char c) { return c == 'q' || c == 'x' || c == 'y'; }

  void read_term(int sign) {
    const std::size_t term_start = pos_;
    Coefficient coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_integer();
      have_coeff = true;
      skip_ws();
    }
    long long q = 0, x = 0, y = 0;
    bool have_var = false;
    while (!at_end()) {
      const std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_variable(peek())) throw ParseError(pos_, "expected q, x or y after '*'");
      }
      if (at_end() || !is_variable(peek())) {
        pos_ = save;
        break;
      }
      const char var = peek();
      ++pos_;
      skip_ws();
      long long exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        exponent = read_integer();
        skip_ws();
      }
      if (var == 'q') q += exponent;
      if (var == 'x') x += exponent;
      if (var == 'y') y += exponent;
      have_var = true;
    }
    if (!have_coeff && !have_var) {
      throw ParseError(term_start, at_end() ? std::string("expected a term")
                                            : std::string("unexpected character '") + peek() + "'");
    }
    if (q > 1'000'000) throw ParseError(term_start, "q exponent out of range");
    const Monomial m{static_cast<int>(q), Character(x, y)};
    if (m.q_degree > max_q_) max_q_ = m.q_degree;
    auto& slot = acc_[m];
    slot = checked_add(slot, sign < 0 ? checked_negate(coeff) : coeff);
  }

  std::string_view text_;
  std::optional<int> bound_;
  std::size_t pos_ = 0;
  int max_q_ = 0;
  std::map<Monomial, Coefficient> acc_;
};

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

GradedCharPoly::GradedCharPoly(int q_bound) : q_bound_(q_bound) { require_bound(q_bound); }

GradedCharPoly::GradedCharPoly(int q_bound, const TermMap& terms) : q_bound_(q_bound) {
  require_bound(q_bound);
  for (const auto& [m, c] : terms) accumulate(m, c);
}

GradedCharPoly GradedCharPoly::monomial(int q_bound, int q_degree, Character chi, Coefficient c) {
  GradedCharPoly p(q_bound);
  p.accumulate({q_degree, chi}, c);
  return p;
}

GradedCharPoly GradedCharPoly::constant(int q_bound, Coefficient c) {
  return monomial(q_bound, 0, Character::trivial(), c);
}

void GradedCharPoly::accumulate(const Monomial& m, Coefficient c) {
  if (m.q_degree < 0 || m.q_degree > q_bound_) {
    throw DegreeBoundError("q-degree " + std::to_string(m.q_degree) + " outside [0," +
                           std::to_string(q_bound_) + "]");
  }
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Coefficient GradedCharPoly::coefficient(int q_degree, Character chi) const {
  auto it = terms_.find(Monomial{q_degree, chi});
  return it == terms_.end() ? 0 : it->second;
}

std::set<Character> GradedCharPoly::character_support() const {
  std::set<Character> out;
  for (const auto& entry : terms_) out.insert(entry.first.chi);
  return out;
}

std::vector<Coefficient> GradedCharPoly::dims_by_degree() const {
  std::vector<Coefficient> dims(static_cast<std::size_t>(q_bound_) + 1, 0);
  for (const auto& [m, c] : terms_) {
    auto& slot = dims[static_cast<std::size_t>(m.q_degree)];
    slot = checked_add(slot, c);
  }
  return dims;
}

GradedCharPoly GradedCharPoly::degree_part(int q_degree) const {
  GradedCharPoly out(q_bound_);
  for (const auto& [m, c] : terms_) {
    if (m.q_degree == q_degree) out.terms_.emplace(m, c);
  }
  return out;
}

GradedCharPoly GradedCharPoly::with_q_bound(int q_bound) const { return GradedCharPoly(q_bound, terms_); }

GradedCharPoly GradedCharPoly::shift_degree(int shift) const {
  GradedCharPoly out(q_bound_ + shift);
  for (const auto& [m, c] : terms_) out.accumulate({m.q_degree + shift, m.chi}, c);
  return out;
}

GradedCharPoly add(const GradedCharPoly& p, const GradedCharPoly& r) {
  GradedCharPoly out(std::max(p.q_bound(), r.q_bound()));
  out.terms_ = p.terms_;
  for (const auto& [m, c] : r.terms_) out.accumulate(m, c);
  return out;
}

GradedCharPoly negate(const GradedCharPoly& p) {
  GradedCharPoly out(p.q_bound());
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, checked_negate(c));
  return out;
}

GradedCharPoly mul(const GradedCharPoly& p, const GradedCharPoly& r, std::optional<int> q_bound) {
  GradedCharPoly out(q_bound.value_or(p.q_bound() + r.q_bound()));
  for (const auto& [m1, c1] : p.terms_) {
    for (const auto& [m2, c2] : r.terms_) {
      out.accumulate({m1.q_degree + m2.q_degree, m1.chi + m2.chi}, checked_mul(c1, c2));
    }
  }
  return out;
}

GradedCharPoly dual(const GradedCharPoly& p) { return substitute(p, Character(4, 0), Character(0, 4)); }

GradedCharPoly substitute(const GradedCharPoly& p, Character image_of_x, Character image_of_y) {
  GradedCharPoly::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    const Character image = m.chi.i() * image_of_x + m.chi.j() * image_of_y;
    auto& slot = terms[Monomial{m.q_degree, image}];
    slot = checked_add(slot, c);
  }
  return GradedCharPoly(p.q_bound(), terms);
}

GradedCharPoly twist(const GradedCharPoly& p, Character chi) {
  GradedCharPoly::TermMap terms;
  for (const auto& [m, c] : p.terms()) terms.emplace(Monomial{m.q_degree, m.chi + chi}, c);
  return GradedCharPoly(p.q_bound(), terms);
}

std::string to_string(const GradedCharPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::string> vars;
    if (m.q_degree == 1) vars.emplace_back("q");
    if (m.q_degree > 1) vars.push_back("q^" + std::to_string(m.q_degree));
    if (m.chi.i() == 1) vars.emplace_back("x");
    if (m.chi.i() > 1) vars.push_back("x^" + std::to_string(m.chi.i()));
    if (m.chi.j() == 1) vars.emplace_back("y");
    if (m.chi.j() > 1) vars.push_back("y^" + std::to_string(m.chi.j()));

    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    // The magnitude of INT64_MIN is printed via unsigned arithmetic.
    const auto magnitude =
        c < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (vars.empty() || magnitude != 1) out += std::to_string(magnitude);
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (k > 0) out += "*";
      out += vars[k];
    }
  }
  return out;
}

GradedCharPoly parse_charpoly(std::string_view text, std::optional<int> q_bound) {
  if (q_bound) require_bound(*q_bound);
  return PolyReader(text, q_bound).read();
}

nlohmann::json to_json(const GradedCharPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"q", m.q_degree}, {"x", m.chi.i()}, {"y", m.chi.j()}, {"c", c}});
  }
  return {{"q_bound", p.q_bound()}, {"terms", std::move(terms)}};
}

GradedCharPoly charpoly_from_json(const nlohmann::json& j) {
  try {
    const int bound = j.at("q_bound").get<int>();
    require_bound(bound);
    GradedCharPoly::TermMap terms;
    for (const auto& t : j.at("terms")) {
      const Monomial m{t.at("q").get<int>(),
                       Character(t.at("x").get<long long>(), t.at("y").get<long long>())};
      auto& slot = terms[m];
      slot = checked_add(slot, t.at("c").get<Coefficient>());
    }
    return GradedCharPoly(bound, terms);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace beauville
