#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace beauville {

/// Deliberate defects that can be switched on in an engine model. They exist
/// so the fact checker can prove it notices each class of bookkeeping error.
/// A default-constructed plan is the correct engine.
struct FaultPlan {
  /// canonical_character returns minus det V* instead of det V*.
  bool negate_canonical_character = false;
  /// K(i,j) = O(i,j)[3i+3j, 2i+3j] instead of [3i+3j, 3i+2j].
  bool transpose_k_torsion_offset = false;
  /// The restriction sequence subtracts the P^2 part of degree n-6, not n-5.
  bool shift_restriction_degree = false;

  bool any() const {
    return negate_canonical_character || transpose_k_torsion_offset || shift_restriction_degree;
  }

  /// Names accepted by the CLI: "canonical-character", "k-torsion-offset",
  /// "restriction-offset".
  static std::optional<FaultPlan> from_name(std::string_view name);
  static std::vector<std::string_view> names();

  friend bool operator==(const FaultPlan&, const FaultPlan&) = default;
};

inline std::optional<FaultPlan> FaultPlan::from_name(std::string_view name) {
  FaultPlan plan;
  if (name == "canonical-character") {
    plan.negate_canonical_character = true;
  } else if (name == "k-torsion-offset") {
    plan.transpose_k_torsion_offset = true;
  } else if (name == "restriction-offset") {
    plan.shift_restriction_degree = true;
  } else if (name != "none") {
    return std::nullopt;
  }
  return plan;
}

inline std::vector<std::string_view> FaultPlan::names() {
  return {"canonical-character", "k-torsion-offset", "restriction-offset"};
}

}  // namespace beauville
