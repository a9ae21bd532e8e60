#include "beauville/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace beauville {
namespace {

using Rows = std::vector<std::vector<std::string>>;

// Space-padded columns; the first row is the header.
std::string text_grid(const Rows& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string markdown_grid(const Rows& rows) {
  if (rows.empty()) return "";
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    out += "|";
    for (const auto& cell : row) out += " " + cell + " |";
    out += "\n";
  };
  emit(rows.front());
  out += "|";
  for (std::size_t c = 0; c < rows.front().size(); ++c) out += "---|";
  out += "\n";
  for (std::size_t r = 1; r < rows.size(); ++r) emit(rows[r]);
  return out;
}

std::string grid(const Rows& rows, Format format) {
  return format == Format::markdown ? markdown_grid(rows) : text_grid(rows);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json characters_json(const std::set<Character>& chars) {
  nlohmann::json out = nlohmann::json::array();
  for (const Character chi : chars) out.push_back(chi.to_string());
  return out;
}

std::string characters_text(const std::set<Character>& chars) {
  std::string out = "{";
  for (const Character chi : chars) {
    if (out.size() > 1) out += ", ";
    out += chi.to_string();
  }
  return out + "}";
}

nlohmann::json entries_json(const Collection& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : c.entries) out.push_back(e.to_string());
  return out;
}

std::string type_label(const Collection& c) {
  const auto type = numerical_type(c);
  return type ? type->label() : "?";
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "markdown") return Format::markdown;
  if (name == "json") return Format::json;
  return std::nullopt;
}

std::string helix_name(std::size_t index) { return "H" + std::to_string(index + 1); }

std::vector<Collection> presentation_order(const Surface& surface, std::span<const Collection> collections) {
  static const std::vector<std::string> kOrder = {"I_1", "IV_1", "I_-1", "IV_-1", "II_0", "I_0"};
  std::vector<Collection> out;
  for (const auto& c : collections) out.push_back(normalize(surface, c));
  auto rank = [](const Collection& c) {
    const auto it = std::find(kOrder.begin(), kOrder.end(), type_label(c));
    return static_cast<std::size_t>(it - kOrder.begin());
  };
  std::stable_sort(out.begin(), out.end(), [&](const Collection& x, const Collection& y) { return rank(x) < rank(y); });
  return out;
}

std::string render_cohomology(const Surface& surface, const LineBundleClass& bundle, Format format, bool verbose) {
  const CohomologyRanks h = surface.cohomology(bundle);
  const LineBundleClass o = surface.to_O_basis(bundle);
  const LineBundleClass k = surface.to_K_basis(bundle);
  if (format == Format::json) {
    nlohmann::json j = {{"bundle", bundle.to_string()},
                        {"o_basis", o.to_string()},
                        {"k_basis", k.to_string()},
                        {"h0", h.h0},
                        {"h1", h.h1},
                        {"h2", h.h2},
                        {"ranks", h.to_string()},
                        {"euler", h.euler()}};
    if (verbose) j["cover_polynomial"] = to_json(surface.kunneth_poly(bundle));
    return dump(j);
  }
  Rows rows = {{"bundle", "h0", "h1", "h2", "ranks"},
               {bundle.to_string(), std::to_string(h.h0), std::to_string(h.h1), std::to_string(h.h2), h.to_string()}};
  if (format == Format::text) {
    std::string out = bundle.to_string() + ": " + h.to_string() + "\n";
    if (verbose) {
      out += "O-basis: " + o.to_string() + "\n";
      out += "K-basis: " + k.to_string() + "\n";
      out += "h0, h1, h2: " + std::to_string(h.h0) + ", " + std::to_string(h.h1) + ", " + std::to_string(h.h2) + "\n";
      out += "cover polynomial: " + to_string(surface.kunneth_poly(bundle)) + "\n";
    }
    return out;
  }
  std::string out = markdown_grid(rows);
  if (verbose) out += "\nCover polynomial: `" + to_string(surface.kunneth_poly(bundle)) + "`\n";
  return out;
}

std::string render_table(const Surface& surface, const BidegreeBox& box, Format format) {
  if (format == Format::json) {
    nlohmann::json cells = nlohmann::json::array();
    if (!box.empty()) {
      for (int j = box.j_max; j >= box.j_min; --j) {
        for (int i = box.i_min; i <= box.i_max; ++i) {
          const LineBundleClass l = LineBundleClass::K(i, j);
          const CohomologyRanks h = surface.cohomology(l);
          cells.push_back({{"bundle", l.to_string()}, {"i", i}, {"j", j}, {"h0", h.h0}, {"h1", h.h1}, {"h2", h.h2},
                           {"ranks", h.to_string()}});
        }
      }
    }
    return dump(cells);
  }
  if (box.empty()) return "";
  Rows rows;
  std::vector<std::string> header = {"j\\i"};
  for (int i = box.i_min; i <= box.i_max; ++i) header.push_back(std::to_string(i));
  rows.push_back(std::move(header));
  for (int j = box.j_max; j >= box.j_min; --j) {
    std::vector<std::string> row = {std::to_string(j)};
    for (int i = box.i_min; i <= box.i_max; ++i) row.push_back(surface.cohomology(LineBundleClass::K(i, j)).to_string());
    rows.push_back(std::move(row));
  }
  return grid(rows, format);
}

std::string render_acyclic(const Surface& surface, const BidegreeBox& box, Format format, bool verbose) {
  const AcyclicSupport support = AcyclicSupport::compute(surface, box);
  if (format == Format::json) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& [d, chars] : support.sets()) {
      sets.push_back({{"bundle", d.bundle().to_string()}, {"i", d.i}, {"j", d.j}, {"characters", characters_json(chars)}});
    }
    nlohmann::json j = {{"range", box.to_string()},
                        {"sets", std::move(sets)},
                        {"set_count", support.sets().size()},
                        {"bundle_count", support.bundle_count()}};
    if (verbose) {
      nlohmann::json bundles = nlohmann::json::array();
      for (const auto& l : enumerate_acyclic_bundles(surface, box)) bundles.push_back(l.to_string());
      j["bundles"] = std::move(bundles);
    }
    return dump(j);
  }
  Rows rows = {{"bundle", "A(L)", "size"}};
  for (const auto& [d, chars] : support.sets()) {
    rows.push_back({d.bundle().to_string(), characters_text(chars), std::to_string(chars.size())});
  }
  std::string out = grid(rows, format);
  out += (format == Format::markdown ? "\n" : "") + std::to_string(support.sets().size()) +
         " non-empty acyclic sets, " + std::to_string(support.bundle_count()) + " acyclic line bundles\n";
  if (verbose) {
    for (const auto& l : enumerate_acyclic_bundles(surface, box)) out += l.to_string() + "\n";
  }
  return out;
}

std::string render_search(const Surface& surface, std::span<const Collection> collections, Format format,
                          bool verbose) {
  const std::vector<Collection> ordered = presentation_order(surface, collections);
  if (format == Format::json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : ordered) {
      nlohmann::json item = {{"type", type_label(c)}, {"entries", entries_json(c)}};
      item["certificate"] = certificate(surface, c);
      list.push_back(std::move(item));
    }
    return dump({{"count", ordered.size()}, {"collections", std::move(list)}});
  }
  Rows rows = {{"type", "E0", "E1", "E2", "E3"}};
  for (const auto& c : ordered) {
    std::vector<std::string> row = {type_label(c)};
    for (const auto& e : c.entries) row.push_back(e.a == 0 && e.b == 0 && e.chi.is_zero() ? "O" : e.to_string());
    rows.push_back(std::move(row));
  }
  std::string out = grid(rows, format);
  out += (format == Format::markdown ? "\n" : "") + std::to_string(ordered.size()) + " exceptional collections\n";
  if (verbose) {
    for (const auto& c : ordered) out += "\n" + type_label(c) + " certificate:\n" + certificate(surface, c).dump(2) + "\n";
  }
  return out;
}

std::string render_helices(const Surface& surface, std::span<const Helix> helices, Format format) {
  (void)surface;
  if (format == Format::json) {
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t k = 0; k < helices.size(); ++k) {
      nlohmann::json spires = nlohmann::json::array();
      for (const auto& s : helices[k].spires()) spires.push_back({{"type", type_label(s)}, {"entries", entries_json(s)}});
      list.push_back({{"name", helix_name(k)}, {"sequence", helices[k].spire_sequence()}, {"spires", std::move(spires)}});
    }
    return dump(list);
  }
  Rows rows = {{"helix", "spires"}};
  for (std::size_t k = 0; k < helices.size(); ++k) {
    std::string seq;
    for (const auto& label : helices[k].spire_sequence()) seq += (seq.empty() ? "" : " -> ") + label;
    rows.push_back({helix_name(k), seq});
  }
  return grid(rows, format);
}

nlohmann::json ext_matrix_to_json(const ExtMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) r.push_back(cell.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_ext_matrix(const Surface& surface, const Helix& helix, std::string_view name, Format format) {
  const ExtMatrix m = ext_matrix(surface, helix);
  if (format == Format::json) {
    return dump({{"helix", name}, {"base", type_label(helix.base())}, {"matrix", ext_matrix_to_json(m)}});
  }
  Rows rows = {{"i\\j", "0", "1", "2", "3"}};
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row = {std::to_string(i)};
    for (const auto& cell : m[i]) row.push_back(cell.to_string());
    rows.push_back(std::move(row));
  }
  return "M(" + std::string(name) + "), base spire " + type_label(helix.base()) + "\n" +
         (format == Format::markdown ? "\n" : "") + grid(rows, format);
}

std::string render_height(const Surface& surface, const Helix& helix, std::string_view name, Format format) {
  const int h = anticanonical_height(surface, helix);
  if (format == Format::json) return dump({{"helix", name}, {"height", h}});
  if (format == Format::markdown) return markdown_grid({{"helix", "h"}, {std::string(name), std::to_string(h)}});
  return "h(" + std::string(name) + ") = " + std::to_string(h) + "\n";
}

std::string render_hochschild(const Surface& surface, Format format) {
  const auto hh = surface.hochschild_cohomology();
  if (format == Format::json) return dump({{"hochschild_cohomology", hh}});
  if (format == Format::markdown) {
    Rows rows = {{"k", "dim HH^k(S)"}};
    for (std::size_t k = 0; k < hh.size(); ++k) rows.push_back({std::to_string(k), std::to_string(hh[k])});
    return markdown_grid(rows);
  }
  std::string list;
  for (const long long d : hh) list += (list.empty() ? "" : ",") + std::to_string(d);
  return "dim HH^k(S), k = 0..4: " + list + "\n";
}

std::string render_phantom(const Surface& surface, const Helix& helix, std::string_view name, Format format) {
  const QuasiPhantomReport r = quasi_phantom_report(surface, helix);
  if (format == Format::json) {
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& l : r.lines) {
      lines.push_back({{"quantity", l.quantity}, {"value", l.value}, {"computed", l.computed}, {"basis", l.basis}});
    }
    return dump({{"helix", name},
                 {"anticanonical_height", r.anticanonical_height},
                 {"k0_torsion_order", r.k0_torsion_order},
                 {"k0_free_rank", r.k0_free_rank},
                 {"hochschild_homology_dim", r.hochschild_homology_dim},
                 {"hh0_isomorphism", r.hh0_isomorphism},
                 {"hh0_dim", r.hh0_dim},
                 {"lines", std::move(lines)}});
  }
  Rows rows = {{"quantity", "value", "status", "basis"}};
  for (const auto& l : r.lines) rows.push_back({l.quantity, l.value, l.computed ? "computed" : "cited", l.basis});
  return "Orthogonal complement of " + std::string(name) + "\n" + (format == Format::markdown ? "\n" : "") +
         grid(rows, format);
}

}  // namespace beauville
