#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "beauville/collections.hpp"

namespace beauville {

enum class Format { text, markdown, json };

std::optional<Format> parse_format(std::string_view name);

/// Helix names "H1", "H2", ... in the order of group_into_helices.
std::string helix_name(std::size_t index);

/// Presentation order of the six collections: I_1, IV_1, I_-1, IV_-1, II_0, I_0.
/// Collections of other types follow in their given order.
std::vector<Collection> presentation_order(const Surface& surface, std::span<const Collection> collections);

// Every renderer returns the complete output including a trailing newline.
// JSON renderers emit objects with sorted keys, so equal inputs give
// byte-identical text.

std::string render_cohomology(const Surface& surface, const LineBundleClass& bundle, Format format, bool verbose);

/// Grid of h^0 + q h^1 + q^2 h^2 of K(i,j): rows j descending, columns i
/// ascending. An empty box renders an empty table.
std::string render_table(const Surface& surface, const BidegreeBox& box, Format format);

std::string render_acyclic(const Surface& surface, const BidegreeBox& box, Format format, bool verbose);

/// With verbose (or json) every collection carries its certificate.
std::string render_search(const Surface& surface, std::span<const Collection> collections, Format format,
                          bool verbose);

std::string render_helices(const Surface& surface, std::span<const Helix> helices, Format format);

std::string render_ext_matrix(const Surface& surface, const Helix& helix, std::string_view name, Format format);

std::string render_height(const Surface& surface, const Helix& helix, std::string_view name, Format format);

std::string render_hochschild(const Surface& surface, Format format);

std::string render_phantom(const Surface& surface, const Helix& helix, std::string_view name, Format format);

/// Rank polynomials as strings, row by row.
nlohmann::json ext_matrix_to_json(const ExtMatrix& m);

}  // namespace beauville
