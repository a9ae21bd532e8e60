#include "beauville/surface.hpp"

#include <cctype>
#include <stdexcept>

namespace beauville {
namespace {

constexpr int kSurfaceQBound = 2;

class BundleReader {
 public:
  explicit BundleReader(std::string_view text) : text_(text) {}

  LineBundleClass read() {
    skip_ws();
    if (at_end()) fail("empty bundle");
    Basis basis = Basis::O;
    if (peek() == 'O') {
      basis = Basis::O;
    } else if (peek() == 'K') {
      basis = Basis::K;
    } else {
      fail(std::string("expected 'O' or 'K' but found '") + peek() + "'");
    }
    ++pos_;
    expect('(');
    const long long a = read_integer();
    expect(',');
    const long long b = read_integer();
    expect(')');
    Character chi;
    skip_ws();
    if (!at_end()) {
      expect('[');
      const long long i = read_integer();
      expect(',');
      const long long j = read_integer();
      expect(']');
      chi = Character(i, j);
    }
    skip_ws();
    if (!at_end()) fail(std::string("unexpected trailing '") + peek() + "'");
    return {static_cast<int>(a), static_cast<int>(b), chi, basis};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (at_end()) fail(std::string("expected '") + c + "' but input ended");
    if (peek() != c) fail(std::string("expected '") + c + "' but found '" + peek() + "'");
    ++pos_;
  }
  long long read_integer() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) fail("integer out of range");
      ++pos_;
    }
    if (pos_ == start) fail(at_end() ? "expected an integer" : std::string("expected an integer but found '") + peek() + "'");
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LineBundleClass::to_string() const {
  std::string out = basis == Basis::O ? "O(" : "K(";
  out += std::to_string(a) + "," + std::to_string(b) + ")";
  if (!chi.is_zero()) out += chi.to_string();
  return out;
}

LineBundleClass operator*(const LineBundleClass& l1, const LineBundleClass& l2) {
  if (l1.basis != l2.basis) {
    throw std::invalid_argument("tensor product of " + l1.to_string() + " and " + l2.to_string() +
                                " mixes O- and K-basis");
  }
  return {l1.a + l2.a, l1.b + l2.b, l1.chi + l2.chi, l1.basis};
}

LineBundleClass parse_bundle(std::string_view text) { return BundleReader(text).read(); }

long long euler_char(const LineBundleClass& l) {
  return (static_cast<long long>(l.a) - 1) * (static_cast<long long>(l.b) - 1);
}

long long intersection(const LineBundleClass& l1, const LineBundleClass& l2) {
  return static_cast<long long>(l1.a) * l2.b + static_cast<long long>(l1.b) * l2.a;
}

int CohomologyRanks::lowest_degree() const {
  for (int p = 0; p <= 2; ++p) {
    if (at(p) != 0) return p;
  }
  return -1;
}

std::string CohomologyRanks::to_string() const {
  if (is_zero()) return "0";
  auto term = [](long long c, int degree) {
    std::string var = degree == 0 ? "" : degree == 1 ? "q" : "q^2";
    if (degree == 0) return std::to_string(c);
    return c == 1 ? var : std::to_string(c) + var;
  };
  std::string out;
  auto append = [&](int degree) {
    const long long c = at(degree);
    if (c == 0) return;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    out += term(c < 0 ? -c : c, degree);
  };
  if (h2 != 0) {
    for (int d = 2; d >= 0; --d) append(d);
  } else {
    for (int d = 0; d <= 2; ++d) append(d);
  }
  return out;
}

GradedCharPoly CohomologyRanks::to_poly() const {
  GradedCharPoly::TermMap terms;
  for (int d = 0; d <= 2; ++d) terms[Monomial{d, Character::trivial()}] = at(d);
  return GradedCharPoly(kSurfaceQBound, terms);
}

CohomologyRanks parse_ranks(std::string_view text) {
  const GradedCharPoly p = parse_charpoly(text, kSurfaceQBound);
  for (const auto& entry : p.terms()) {
    if (!entry.first.chi.is_zero()) {
      throw ParseError(0, "rank polynomial must not involve x or y: " + std::string(text));
    }
  }
  return {p.coefficient(0, {}), p.coefficient(1, {}), p.coefficient(2, {})};
}

Surface::Surface(CurveAction first, CurveAction second, FaultPlan faults)
    : first_(std::move(first)),
      second_(std::move(second)),
      faults_(faults),
      eta_first_(k_character(first_, faults_)),
      eta_second_(k_character(second_, faults_)) {
  if (!diagonal_action_is_free(first_, second_)) {
    throw std::invalid_argument("diagonal action of G on " + first_.name() + " x " + second_.name() +
                                " is not free");
  }
}

const Surface& Surface::beauville() {
  static const Surface surface(CurveAction::fermat_c(), CurveAction::fermat_c_prime());
  return surface;
}

Character Surface::k_offset(int a, int b) const {
  const Character offset = a * eta_first_ + b * eta_second_;
  if (!faults_.transpose_k_torsion_offset) return offset;
  return {offset.i(), static_cast<long long>(a) * eta_second_.j() + static_cast<long long>(b) * eta_first_.j()};
}

LineBundleClass Surface::to_O_basis(const LineBundleClass& l) const {
  if (l.basis == Basis::O) return l;
  return LineBundleClass::O(l.a, l.b, l.chi + k_offset(l.a, l.b));
}

LineBundleClass Surface::to_K_basis(const LineBundleClass& l) const {
  if (l.basis == Basis::K) return l;
  return LineBundleClass::K(l.a, l.b, l.chi - k_offset(l.a, l.b));
}

LineBundleClass Surface::in_basis(const LineBundleClass& l, Basis basis) const {
  return basis == Basis::O ? to_O_basis(l) : to_K_basis(l);
}

bool Surface::equivalent(const LineBundleClass& l1, const LineBundleClass& l2) const {
  return to_O_basis(l1) == to_O_basis(l2);
}

GradedCharPoly Surface::kunneth_poly(const LineBundleClass& l) const {
  const LineBundleClass o = to_O_basis(l);
  const GradedCharPoly product = mul(cohomology_poly(first_, o.a, {}, faults_),
                                     cohomology_poly(second_, o.b, {}, faults_), kSurfaceQBound);
  return twist(product, o.chi);
}

CohomologyRanks Surface::cohomology(const LineBundleClass& l) const {
  const GradedCharPoly p = kunneth_poly(l);
  const Character trivial;
  return {p.coefficient(0, trivial), p.coefficient(1, trivial), p.coefficient(2, trivial)};
}

LineBundleClass Surface::canonical_class(Basis basis) const {
  const LineBundleClass omega =
      LineBundleClass::O(2, 2, canonical_character(first_, faults_) + canonical_character(second_, faults_));
  return in_basis(omega, basis);
}

LineBundleClass Surface::serre_dual(const LineBundleClass& l) const {
  return canonical_class(l.basis) * l.dual();
}

std::array<long long, 5> Surface::hochschild_cohomology() const {
  // Lambda^q T_S as a list of line bundle summands, q = 0, 1, 2.
  const std::array<std::vector<LineBundleClass>, 3> exterior_powers = {{
      {LineBundleClass::K(0, 0)},
      {LineBundleClass::K(-2, 0), LineBundleClass::K(0, -2)},
      {LineBundleClass::K(-2, -2)},
  }};
  std::array<long long, 5> hh{};
  for (int q = 0; q <= 2; ++q) {
    for (const auto& summand : exterior_powers[static_cast<std::size_t>(q)]) {
      const CohomologyRanks h = cohomology(summand);
      for (int p = 0; p <= 2; ++p) hh[static_cast<std::size_t>(p + q)] += h.at(p);
    }
  }
  return hh;
}

}  // namespace beauville
