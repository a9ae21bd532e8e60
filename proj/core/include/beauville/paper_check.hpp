#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "beauville/surface.hpp"

namespace beauville {

/// The checked-in fact file, compiled into the library.
std::string_view embedded_paper_facts();

/// One reference value together with the engine query that reproduces it.
struct PaperFact {
  std::string id;
  std::string description;
  std::string source;     ///< where the value is printed
  std::string query;      ///< e.g. "surface.cohomology"
  nlohmann::json args;    ///< query arguments, an object
  nlohmann::json expected;
};

/// Parses a fact file: {"facts": [{id, description, source, query, args, expected}]}.
/// Throws ParseError on malformed structure or duplicate ids.
std::vector<PaperFact> load_facts(const nlohmann::json& document);

/// The embedded facts.
std::vector<PaperFact> default_facts();

struct FactResult {
  const PaperFact* fact = nullptr;
  bool passed = false;
  nlohmann::json computed;  ///< canonical form, or {"error": message}
  nlohmann::json expected;  ///< canonical form
};

/// Names of all supported queries.
std::vector<std::string> supported_queries();

/// Runs the query of one fact; both sides are brought to a canonical form
/// (polynomials reparsed, sets sorted, bundles in the O-basis) before the
/// comparison. Engine exceptions count as a failure.
FactResult check_fact(const Surface& surface, const PaperFact& fact);

std::vector<FactResult> run_paper_check(const Surface& surface, const std::vector<PaperFact>& facts);

/// One line per fact and a summary line; failures show computed vs expected.
std::string render_check_text(const std::vector<FactResult>& results);
nlohmann::json render_check_json(const std::vector<FactResult>& results);

}  // namespace beauville
