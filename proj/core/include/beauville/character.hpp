#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace beauville {

/// Order of each cyclic factor of G = (Z/5)^2.
inline constexpr int kGroupExponent = 5;

/// Least non-negative residue of `v` modulo 5.
constexpr int mod5(long long v) {
  const long long r = v % kGroupExponent;
  return static_cast<int>(r < 0 ? r + kGroupExponent : r);
}

namespace detail {

/// A pair of residues mod 5, always stored normalized in {0,...,4}.
/// CRTP keeps characters of G and elements of G apart at the type level.
template <typename Derived>
class ResiduePair {
 public:
  constexpr ResiduePair() = default;
  constexpr ResiduePair(long long first, long long second)
      : first_(static_cast<std::uint8_t>(mod5(first))),
        second_(static_cast<std::uint8_t>(mod5(second))) {}

  constexpr int first() const { return first_; }
  constexpr int second() const { return second_; }

  constexpr bool is_zero() const { return first_ == 0 && second_ == 0; }
  /// Position 5*first + second in the canonical enumeration of all 25 values.
  constexpr int index() const { return first_ * kGroupExponent + second_; }

  static constexpr Derived from_index(int index) {
    return Derived(index / kGroupExponent, index % kGroupExponent);
  }

  static constexpr std::array<Derived, 25> all() {
    std::array<Derived, 25> out{};
    for (int k = 0; k < 25; ++k) out[static_cast<std::size_t>(k)] = from_index(k);
    return out;
  }

  friend constexpr Derived operator+(Derived a, Derived b) {
    return Derived(a.first() + b.first(), a.second() + b.second());
  }
  friend constexpr Derived operator-(Derived a, Derived b) {
    return Derived(a.first() - b.first(), a.second() - b.second());
  }
  friend constexpr Derived operator-(Derived a) { return Derived(-a.first(), -a.second()); }
  friend constexpr Derived operator*(long long k, Derived a) {
    return Derived(k * a.first(), k * a.second());
  }
  constexpr Derived& operator+=(Derived other) {
    auto& self = static_cast<Derived&>(*this);
    return self = self + other;
  }

  friend constexpr bool operator==(const ResiduePair&, const ResiduePair&) = default;
  friend constexpr auto operator<=>(const ResiduePair&, const ResiduePair&) = default;

 private:
  std::uint8_t first_ = 0;
  std::uint8_t second_ = 0;
};

}  // namespace detail

/// A character [i,j] of G: e1 -> zeta^i, e2 -> zeta^j. Written x^i y^j in
/// the representation ring.
class Character : public detail::ResiduePair<Character> {
 public:
  using ResiduePair::ResiduePair;

  constexpr int i() const { return first(); }
  constexpr int j() const { return second(); }

  static constexpr Character trivial() { return {}; }

  /// "[i,j]"
  std::string to_string() const;
};

/// An element a*e1 + b*e2 of G.
class GroupElement : public detail::ResiduePair<GroupElement> {
 public:
  using ResiduePair::ResiduePair;

  constexpr int a() const { return first(); }
  constexpr int b() const { return second(); }

  /// "a*e1+b*e2" in reduced form, e.g. "e1+2e2", "0".
  std::string to_string() const;
};

/// The value chi(g) as an exponent of zeta, i.e. i*a + j*b mod 5.
constexpr int pairing(Character chi, GroupElement g) {
  return mod5(chi.i() * g.a() + chi.j() * g.b());
}

/// Character eta with 2*eta = chi. Unique since 2 is invertible mod 5 (inverse 3).
constexpr Character half(Character chi) { return 3 * chi; }

}  // namespace beauville
