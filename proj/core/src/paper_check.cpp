#include "beauville/paper_check.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "beauville/collections.hpp"
#include "beauville/report.hpp"

namespace beauville {
namespace {

using nlohmann::json;

Character parse_character(const std::string& text) { return parse_bundle("O(0,0)" + text).chi; }

std::string canonical_poly(const json& v) { return to_string(parse_charpoly(v.get<std::string>())); }
std::string canonical_ranks(const json& v) { return parse_ranks(v.get<std::string>()).to_string(); }

json canonical_character_set(const json& v) {
  std::set<Character> chars;
  for (const auto& item : v) chars.insert(parse_character(item.get<std::string>()));
  json out = json::array();
  for (const Character chi : chars) out.push_back(chi.to_string());
  return out;
}

json characters_set_json(const std::set<Character>& chars) {
  json out = json::array();
  for (const Character chi : chars) out.push_back(chi.to_string());
  return out;
}

json canonical_rank_matrix(const json& v) {
  json out = json::array();
  for (const auto& row : v) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(canonical_ranks(cell));
    out.push_back(std::move(r));
  }
  return out;
}

json identity(const json& v) { return v; }

Collection parse_collection(const json& entries) {
  if (!entries.is_array() || entries.size() != 4) throw ParseError(0, "a collection needs four entries");
  Collection c;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::string text = entries[k].get<std::string>();
    c.entries[k] = text == "O" ? LineBundleClass::K(0, 0) : parse_bundle(text);
  }
  return c;
}

Bidegree k_bidegree(const Surface& surface, const std::string& text) {
  const LineBundleClass l = surface.to_K_basis(parse_bundle(text));
  if (!l.chi.is_zero()) throw ParseError(0, "acyclic sets are indexed by K(i,j) without a character");
  return {l.a, l.b};
}

// Engine results shared between facts of one run.
class Engine {
 public:
  explicit Engine(const Surface& surface) : surface_(surface) {}

  const Surface& surface() const { return surface_; }

  const AcyclicSupport& support() {
    if (!support_) support_ = AcyclicSupport::compute(surface_);
    return *support_;
  }
  const std::vector<Collection>& collections() {
    if (!collections_) collections_ = search_collections(surface_);
    return *collections_;
  }
  const std::vector<Helix>& helices() {
    if (!helices_) helices_ = group_into_helices(surface_, collections());
    return *helices_;
  }
  const Helix& helix(const json& args) {
    const std::string name = args.at("helix").get<std::string>();
    const auto& all = helices();
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (helix_name(k) == name) return all[k];
    }
    throw std::out_of_range("no helix named " + name);
  }

 private:
  const Surface& surface_;
  std::optional<AcyclicSupport> support_;
  std::optional<std::vector<Collection>> collections_;
  std::optional<std::vector<Helix>> helices_;
};

struct Query {
  std::function<json(Engine&, const json&)> compute;
  std::function<json(const json&)> canonical;
};

const CurveAction& curve_arg(const json& args) { return CurveAction::by_name(args.at("curve").get<std::string>()); }

const std::string& report_value(const QuasiPhantomReport& r, std::string_view quantity) {
  for (const auto& line : r.lines) {
    if (line.quantity == quantity) return line.value;
  }
  throw std::logic_error("report has no line " + std::string(quantity));
}

const std::map<std::string, Query>& queries() {
  static const std::map<std::string, Query> table = {
      {"curve.h0",
       {[](Engine& e, const json& a) {
          return to_string(h0_poly(curve_arg(a), a.at("n").get<int>(), e.surface().faults()));
        },
        canonical_poly}},
      {"curve.h1",
       {[](Engine& e, const json& a) {
          return to_string(h1_poly(curve_arg(a), a.at("n").get<int>(), e.surface().faults()));
        },
        canonical_poly}},
      {"curve.cohomology_K",
       {[](Engine& e, const json& a) {
          return to_string(k_cohomology_poly(curve_arg(a), a.at("m").get<int>(), e.surface().faults()));
        },
        canonical_poly}},
      {"curve.canonical_character",
       {[](Engine& e, const json& a) { return canonical_character(curve_arg(a), e.surface().faults()).to_string(); },
        [](const json& v) { return json(parse_character(v.get<std::string>()).to_string()); }}},
      {"curve.k_character",
       {[](Engine& e, const json& a) { return k_character(curve_arg(a), e.surface().faults()).to_string(); },
        [](const json& v) { return json(parse_character(v.get<std::string>()).to_string()); }}},
      {"curve.stabilizer",
       {[](Engine&, const json& a) {
          const auto divisor = static_cast<RamificationDivisor>(a.at("divisor").get<int>());
          return stabilizer(curve_arg(a), divisor).to_string();
        },
        identity}},
      {"curve.diagonal_free",
       {[](Engine& e, const json&) {
          return diagonal_action_is_free(e.surface().first_curve(), e.surface().second_curve());
        },
        identity}},
      {"curve.substitution",
       {[](Engine& e, const json& a) {
          const int n = a.at("n").get<int>();
          const FaultPlan& f = e.surface().faults();
          const GradedCharPoly on_c = cohomology_poly(e.surface().first_curve(), n, {}, f);
          const GradedCharPoly on_cp = cohomology_poly(e.surface().second_curve(), n, {}, f);
          return substitute(on_c, Character(2, 1), Character(4, 3)) == on_cp;
        },
        identity}},
      {"surface.cohomology",
       {[](Engine& e, const json& a) {
          return e.surface().cohomology(parse_bundle(a.at("bundle").get<std::string>())).to_string();
        },
        canonical_ranks}},
      {"surface.canonical_class",
       {[](Engine& e, const json&) { return e.surface().canonical_class(Basis::O).to_string(); },
        [](const json& v) { return json(parse_bundle(v.get<std::string>()).to_string()); }}},
      {"surface.intersection",
       {[](Engine&, const json& a) {
          return intersection(parse_bundle(a.at("first").get<std::string>()),
                              parse_bundle(a.at("second").get<std::string>()));
        },
        identity}},
      {"surface.hochschild", {[](Engine& e, const json&) { return json(e.surface().hochschild_cohomology()); }, identity}},
      {"acyclic.set",
       {[](Engine& e, const json& a) {
          return characters_set_json(e.support().at(k_bidegree(e.surface(), a.at("bundle").get<std::string>())));
        },
        canonical_character_set}},
      {"acyclic.set_count", {[](Engine& e, const json&) { return json(e.support().sets().size()); }, identity}},
      {"acyclic.bundle_count", {[](Engine& e, const json&) { return json(e.support().bundle_count()); }, identity}},
      {"search.count", {[](Engine& e, const json&) { return json(e.collections().size()); }, identity}},
      {"search.contains",
       {[](Engine& e, const json& a) {
          const Collection wanted = normalize(e.surface(), parse_collection(a.at("entries")));
          const auto& found = e.collections();
          const auto type = numerical_type(wanted);
          return std::find(found.begin(), found.end(), wanted) != found.end() && type &&
                 type->label() == a.at("type").get<std::string>();
        },
        identity}},
      {"search.type_lifts",
       {[](Engine& e, const json& a) {
          const auto type = NumericalType::parse(a.at("type").get<std::string>());
          if (!type) throw ParseError(0, "unknown numerical type " + a.at("type").get<std::string>());
          return json(lifts(e.surface(), e.support(), type_bidegrees(*type)).size());
        },
        identity}},
      {"helix.count", {[](Engine& e, const json&) { return json(e.helices().size()); }, identity}},
      {"helix.spires", {[](Engine& e, const json& a) { return json(e.helix(a).spire_sequence()); }, identity}},
      {"helix.all_spires_exceptional",
       {[](Engine& e, const json&) {
          for (const auto& h : e.helices()) {
            for (const auto& s : h.spires()) {
              if (!is_exceptional(e.surface(), s) || !is_exceptional_direct(e.surface(), s)) return false;
            }
          }
          return true;
        },
        identity}},
      {"helix.ext_matrix",
       {[](Engine& e, const json& a) { return ext_matrix_to_json(ext_matrix(e.surface(), e.helix(a))); },
        canonical_rank_matrix}},
      {"helix.height", {[](Engine& e, const json& a) { return json(anticanonical_height(e.surface(), e.helix(a))); },
                        identity}},
      {"collection.ext_table",
       {[](Engine& e, const json& a) {
          return ext_matrix_to_json(ext_table(e.surface(), parse_collection(a.at("entries"))));
        },
        canonical_rank_matrix}},
      {"phantom.k0",
       {[](Engine& e, const json& a) {
          return json(report_value(quasi_phantom_report(e.surface(), e.helix(a)), "K_0(A)"));
        },
        identity}},
      {"phantom.hh_star",
       {[](Engine& e, const json& a) {
          return json(quasi_phantom_report(e.surface(), e.helix(a)).hochschild_homology_dim);
        },
        identity}},
      {"phantom.hh0",
       {[](Engine& e, const json& a) {
          return json(report_value(quasi_phantom_report(e.surface(), e.helix(a)), "HH^0(A)"));
        },
        identity}},
      {"lattice.span", {[](Engine& e, const json&) { return json(lattice_span_check(e.surface(), e.collections())); },
                        identity}},
  };
  return table;
}

FactResult check_with(Engine& engine, const PaperFact& fact) {
  FactResult r;
  r.fact = &fact;
  const auto it = queries().find(fact.query);
  if (it == queries().end()) {
    r.computed = {{"error", "unknown query " + fact.query}};
    r.expected = fact.expected;
    return r;
  }
  try {
    r.expected = it->second.canonical(fact.expected);
  } catch (const std::exception& e) {
    r.computed = {{"error", std::string("bad expected value: ") + e.what()}};
    r.expected = fact.expected;
    return r;
  }
  try {
    r.computed = it->second.canonical(it->second.compute(engine, fact.args));
    r.passed = r.computed == r.expected;
  } catch (const std::exception& e) {
    r.computed = {{"error", e.what()}};
  }
  return r;
}

}  // namespace

std::vector<PaperFact> load_facts(const json& document) {
  if (!document.is_object() || !document.contains("facts") || !document["facts"].is_array()) {
    throw ParseError(0, "fact file must be an object with a 'facts' array");
  }
  std::vector<PaperFact> out;
  std::set<std::string> ids;
  for (const auto& item : document["facts"]) {
    PaperFact f;
    try {
      f.id = item.at("id").get<std::string>();
      f.description = item.at("description").get<std::string>();
      f.source = item.at("source").get<std::string>();
      f.query = item.at("query").get<std::string>();
      f.args = item.value("args", json::object());
      f.expected = item.at("expected");
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("malformed fact: ") + e.what());
    }
    if (f.source.empty()) throw ParseError(0, "fact " + f.id + " has no source");
    if (!ids.insert(f.id).second) throw ParseError(0, "duplicate fact id " + f.id);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<PaperFact> default_facts() { return load_facts(json::parse(embedded_paper_facts())); }

std::vector<std::string> supported_queries() {
  std::vector<std::string> out;
  for (const auto& entry : queries()) out.push_back(entry.first);
  return out;
}

FactResult check_fact(const Surface& surface, const PaperFact& fact) {
  Engine engine(surface);
  return check_with(engine, fact);
}

std::vector<FactResult> run_paper_check(const Surface& surface, const std::vector<PaperFact>& facts) {
  Engine engine(surface);
  std::vector<FactResult> out;
  out.reserve(facts.size());
  for (const auto& f : facts) out.push_back(check_with(engine, f));
  return out;
}

std::string render_check_text(const std::vector<FactResult>& results) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : results) {
    out += (r.passed ? "[PASS] " : "[FAIL] ") + r.fact->id + "  " + r.fact->description + "\n";
    if (!r.passed) {
      ++failed;
      out += "       computed: " + r.computed.dump() + "\n";
      out += "       expected: " + r.expected.dump() + "\n";
      out += "       source:   " + r.fact->source + "\n";
    }
  }
  if (failed == 0) {
    out += "all facts pass (" + std::to_string(results.size()) + "/" + std::to_string(results.size()) + ")\n";
  } else {
    out += std::to_string(failed) + " of " + std::to_string(results.size()) + " facts failed\n";
  }
  return out;
}

json render_check_json(const std::vector<FactResult>& results) {
  json facts = json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    facts.push_back({{"id", r.fact->id},
                     {"description", r.fact->description},
                     {"source", r.fact->source},
                     {"query", r.fact->query},
                     {"passed", r.passed},
                     {"computed", r.computed},
                     {"expected", r.expected}});
    if (!r.passed) ++failed;
  }
  return {{"total", results.size()}, {"failed", failed}, {"all_pass", failed == 0}, {"facts", std::move(facts)}};
}

}  // namespace beauville
