// Command-line front end for the Beauville surface engine.
//
// Exit codes: 0 success, 1 a reference fact did not reproduce, 2 usage or parse
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "beauville/collections.hpp"
#include "beauville/paper_check.hpp"
#include "beauville/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::string range;
  bool verbose = false;
  unsigned threads = 1;
  std::string fault = "none";
  std::string bundle;
  std::string helix;
  bool json = false;
  std::string facts_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<beauville::Helix> all_helices(const beauville::Surface& surface, unsigned threads) {
  const auto collections = beauville::search_collections(surface, {beauville::BidegreeBox{}, threads});
  return beauville::group_into_helices(surface, collections);
}

// Indices of the helices named by --helix, or all of them.
std::vector<std::size_t> selected(const std::vector<beauville::Helix>& helices, const std::string& name) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < helices.size(); ++k) {
    if (name.empty() || beauville::helix_name(k) == name) out.push_back(k);
  }
  if (out.empty()) throw UsageError("no helix named '" + name + "'");
  return out;
}

int paper_check(const beauville::Surface& surface, const Options& opt) {
  std::vector<beauville::PaperFact> facts;
  if (opt.facts_file.empty()) {
    facts = beauville::default_facts();
  } else {
    std::ifstream in(opt.facts_file);
    if (!in) throw UsageError("cannot read " + opt.facts_file);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw beauville::ParseError(e.byte, e.what());
    }
    facts = beauville::load_facts(doc);
  }
  const auto results = beauville::run_paper_check(surface, facts);
  if (opt.json) {
    std::cout << beauville::render_check_json(results).dump(2) << "\n";
  } else {
    std::cout << beauville::render_check_text(results);
  }
  for (const auto& r : results) {
    if (!r.passed) return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line bundle cohomology, exceptional collections and helices on the Beauville surface"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "markdown", "json"}))
      ->capture_default_str();
  app.add_option("--range", opt.range, "Bidegree box imin:imax,jmin:jmax (default -5:7,-5:7)");
  app.add_flag("--verbose", opt.verbose, "Print polynomials, certificates and bundle lists");
  app.add_option("--threads", opt.threads, "Worker threads for the collection search")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  std::vector<std::string> fault_names = {"none"};
  for (const auto name : beauville::FaultPlan::names()) fault_names.emplace_back(name);
  app.add_option("--inject-fault", opt.fault, "Run the engine with a deliberate defect")
      ->check(CLI::IsMember(fault_names))
      ->capture_default_str();

  auto* cohomology = app.add_subcommand("cohomology", "Cohomology ranks of one line bundle");
  cohomology->add_option("bundle", opt.bundle, "O(a,b)[i,j] or K(a,b)[i,j]")->required();
  app.add_subcommand("table", "Grid of cohomology ranks of K(i,j)");
  app.add_subcommand("acyclic", "Non-empty acyclic sets and their completeness range");
  app.add_subcommand("search", "All exceptional collections of four line bundles");
  app.add_subcommand("helices", "Helices formed by the exceptional collections");
  for (const char* name : {"ext-matrix", "height", "phantom"}) {
    auto* sub = app.add_subcommand(name, name == std::string("ext-matrix") ? "Ext matrix of a helix"
                                         : name == std::string("height")   ? "Anticanonical height of a helix"
                                                                            : "Invariants of the orthogonal complement");
    sub->add_option("--helix", opt.helix, "H1 or H2 (default: all)");
  }
  app.add_subcommand("hochschild", "Hochschild cohomology of S");
  auto* check = app.add_subcommand("paper-check", "Check every reference value against the engine");
  check->add_flag("--json", opt.json, "Machine-readable results");
  check->add_option("--facts", opt.facts_file, "Fact file to use instead of the embedded one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const beauville::Format format = *beauville::parse_format(opt.format);
    const beauville::FaultPlan faults = *beauville::FaultPlan::from_name(opt.fault);
    const beauville::Surface surface(beauville::CurveAction::fermat_c(), beauville::CurveAction::fermat_c_prime(),
                                     faults);
    const beauville::BidegreeBox box = opt.range.empty() ? beauville::BidegreeBox{}
                                                         : beauville::BidegreeBox::parse(opt.range);
    const std::string command = app.get_subcommands().front()->get_name();

    if (command == "cohomology") {
      std::cout << beauville::render_cohomology(surface, beauville::parse_bundle(opt.bundle), format, opt.verbose);
    } else if (command == "table") {
      std::cout << beauville::render_table(surface, box, format);
    } else if (command == "acyclic") {
      std::cout << beauville::render_acyclic(surface, box, format, opt.verbose);
    } else if (command == "search") {
      const auto found = beauville::search_collections(surface, {box, opt.threads});
      std::cout << beauville::render_search(surface, found, format, opt.verbose);
    } else if (command == "helices") {
      std::cout << beauville::render_helices(surface, all_helices(surface, opt.threads), format);
    } else if (command == "ext-matrix" || command == "height" || command == "phantom") {
      const auto helices = all_helices(surface, opt.threads);
      const auto indices = selected(helices, opt.helix);
      if (format == beauville::Format::json && indices.size() > 1) {
        // One JSON array holding the per-helix documents.
        nlohmann::json all = nlohmann::json::array();
        for (const std::size_t k : indices) {
          const std::string name = beauville::helix_name(k);
          const std::string one = command == "ext-matrix" ? beauville::render_ext_matrix(surface, helices[k], name, format)
                                  : command == "height"   ? beauville::render_height(surface, helices[k], name, format)
                                                          : beauville::render_phantom(surface, helices[k], name, format);
          all.push_back(nlohmann::json::parse(one));
        }
        std::cout << all.dump(2) << "\n";
      } else {
        bool first = true;
        for (const std::size_t k : indices) {
          const std::string name = beauville::helix_name(k);
          if (!first) std::cout << "\n";
          first = false;
          if (command == "ext-matrix") {
            std::cout << beauville::render_ext_matrix(surface, helices[k], name, format);
          } else if (command == "height") {
            std::cout << beauville::render_height(surface, helices[k], name, format);
          } else {
            std::cout << beauville::render_phantom(surface, helices[k], name, format);
          }
        }
      }
    } else if (command == "hochschild") {
      std::cout << beauville::render_hochschild(surface, format);
    } else if (command == "paper-check") {
      return paper_check(surface, opt);
    }
  } catch (const beauville::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!opt.bundle.empty() && app.got_subcommand("cohomology")) {
      std::cerr << "  " << opt.bundle << "\n  " << std::string(std::min(e.position(), opt.bundle.size()), ' ') << "^\n";
    }
    return kExitUsage;
  } catch (const beauville::RangeTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    // Engine failures (possible only under an injected fault) count as a
    // mismatch rather than a usage error.
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}
