#include <gtest/gtest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "beauville/paper_check.hpp"
#include "beauville/report.hpp"

namespace beauville {
namespace {

const Surface& S() { return Surface::beauville(); }

std::vector<Helix> helices() { return group_into_helices(S(), search_collections(S())); }

TEST(Report, TableJsonIsSortedAndRoundTrips) {
  const BidegreeBox box{-3, 5, -2, 4};
  const auto cells = nlohmann::json::parse(render_table(S(), box, Format::json));
  ASSERT_EQ(cells.size(), 9u * 7u);
  int prev_j = 100;
  int prev_i = -100;
  for (const auto& cell : cells) {
    const int i = cell["i"];
    const int j = cell["j"];
    EXPECT_TRUE(j < prev_j || (j == prev_j && i > prev_i));
    prev_i = i;
    prev_j = j;
    const CohomologyRanks h = S().cohomology(parse_bundle(cell["bundle"].get<std::string>()));
    EXPECT_EQ(h, (CohomologyRanks{cell["h0"], cell["h1"], cell["h2"]}));
    EXPECT_EQ(parse_ranks(cell["ranks"].get<std::string>()), h);
  }
}

TEST(Report, EmptyRangeRendersEmptyTable) {
  const BidegreeBox empty{1, 0, 0, 0};
  EXPECT_EQ(render_table(S(), empty, Format::text), "");
  EXPECT_EQ(render_table(S(), empty, Format::markdown), "");
  EXPECT_EQ(nlohmann::json::parse(render_table(S(), empty, Format::json)), nlohmann::json::array());
}

TEST(Report, MarkdownTableShowsPrintedCells) {
  const std::string md = render_table(S(), BidegreeBox{-3, 5, -2, 4}, Format::markdown);
  EXPECT_NE(md.find("| 3 | 8q | 6q | 4q | 1+3q | 3+3q | 3+q | 4 | 6 | 8 |"), std::string::npos) << md;
  EXPECT_NE(md.find("| -1 | 8q^2 | 6q^2 | 4q^2 | 3q^2+q | 3q^2+3q |"), std::string::npos) << md;
}

TEST(Report, SearchUsesPresentationOrder) {
  const auto json = nlohmann::json::parse(render_search(S(), search_collections(S()), Format::json, false));
  std::vector<std::string> types;
  for (const auto& c : json["collections"]) types.push_back(c["type"]);
  EXPECT_EQ(types, (std::vector<std::string>{"I_1", "IV_1", "I_-1", "IV_-1", "II_0", "I_0"}));
}

TEST(Report, OutputIsDeterministic) {
  const auto hs = helices();
  for (const Format f : {Format::text, Format::markdown, Format::json}) {
    EXPECT_EQ(render_table(S(), {}, f), render_table(S(), {}, f));
    EXPECT_EQ(render_acyclic(S(), {}, f, true), render_acyclic(S(), {}, f, true));
    EXPECT_EQ(render_search(S(), search_collections(S(), {BidegreeBox{}, 1}), f, true),
              render_search(S(), search_collections(S(), {BidegreeBox{}, 4}), f, true));
    EXPECT_EQ(render_helices(S(), hs, f), render_helices(S(), helices(), f));
    EXPECT_EQ(render_phantom(S(), hs[0], "H1", f), render_phantom(S(), hs[0], "H1", f));
  }
}

TEST(Report, JsonOutputsParse) {
  const auto hs = helices();
  EXPECT_FALSE(nlohmann::json::parse(render_cohomology(S(), LineBundleClass::K(1, 3), Format::json, true)).is_null());
  EXPECT_FALSE(nlohmann::json::parse(render_acyclic(S(), {}, Format::json, true)).is_null());
  EXPECT_FALSE(nlohmann::json::parse(render_helices(S(), hs, Format::json)).is_null());
  EXPECT_FALSE(nlohmann::json::parse(render_phantom(S(), hs[1], "H2", Format::json)).is_null());
  const auto ext = nlohmann::json::parse(render_ext_matrix(S(), hs[0], "H1", Format::json));
  EXPECT_EQ(ext["matrix"][1][1], "3q^2+3q");
  EXPECT_EQ(nlohmann::json::parse(render_height(S(), hs[0], "H1", Format::json))["height"], 2);
  EXPECT_EQ(nlohmann::json::parse(render_hochschild(S(), Format::json))["hochschild_cohomology"],
            nlohmann::json::array({1, 0, 0, 6, 9}));
  const auto coh = nlohmann::json::parse(render_cohomology(S(), LineBundleClass::K(1, 3), Format::json, true));
  EXPECT_EQ(coh["ranks"], "3+3q");
  EXPECT_EQ(charpoly_from_json(coh["cover_polynomial"]), S().kunneth_poly(LineBundleClass::K(1, 3)));
}

TEST(FactCheck, EmbeddedFactsAreWellFormed) {
  const auto facts = default_facts();
  EXPECT_GE(facts.size(), 60u);
  const auto queries = supported_queries();
  const std::set<std::string> known(queries.begin(), queries.end());
  std::size_t table_facts = 0;
  for (const auto& f : facts) {
    EXPECT_FALSE(f.source.empty()) << f.id;
    EXPECT_TRUE(known.count(f.query)) << f.id << " uses " << f.query;
    if (f.query == "surface.cohomology") ++table_facts;
  }
  EXPECT_EQ(table_facts, 33u);
}

TEST(FactCheck, PassesOnCorrectEngine) {
  const auto facts = default_facts();
  const auto results = run_paper_check(S(), facts);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.fact->id << ": " << r.computed.dump();
  EXPECT_NE(render_check_text(results).find("all facts pass"), std::string::npos);
  EXPECT_TRUE(render_check_json(results)["all_pass"].get<bool>());
}

TEST(FactCheck, EveryFaultIsCaught) {
  const auto facts = default_facts();
  for (const auto name : FaultPlan::names()) {
    const Surface faulty(CurveAction::fermat_c(), CurveAction::fermat_c_prime(), *FaultPlan::from_name(name));
    const auto results = run_paper_check(faulty, facts);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    EXPECT_GT(failed, 0) << name;
    EXPECT_FALSE(render_check_json(results)["all_pass"].get<bool>()) << name;
  }
}

TEST(FactCheck, CanonicalFaultFailsSerreSymmetricCellsFirst) {
  FaultPlan plan;
  plan.negate_canonical_character = true;
  const Surface faulty(CurveAction::fermat_c(), CurveAction::fermat_c_prime(), plan);
  const auto facts = default_facts();
  const auto results = run_paper_check(faulty, facts);
  const auto first = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  ASSERT_NE(first, results.end());
  EXPECT_EQ(first->fact->query, "surface.cohomology");
}

TEST(FactCheck, WrongExpectationIsReported) {
  const nlohmann::json doc = {{"facts",
                               {{{"id", "x"},
                                 {"description", "deliberately wrong"},
                                 {"source", "test"},
                                 {"query", "surface.cohomology"},
                                 {"args", {{"bundle", "K(1,3)"}}},
                                 {"expected", "3+2q"}}}}};
  const auto facts = load_facts(doc);
  const auto results = run_paper_check(S(), facts);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
  EXPECT_EQ(results[0].computed, "3+3q");
  EXPECT_NE(render_check_text(results).find("computed: \"3+3q\""), std::string::npos);
}

TEST(FactCheck, MalformedFactFiles) {
  EXPECT_THROW(load_facts(nlohmann::json::array()), ParseError);
  const nlohmann::json fact = {{"id", "a"}, {"description", "d"}, {"source", "s"}, {"query", "helix.count"}, {"expected", 2}};
  EXPECT_THROW(load_facts({{"facts", {fact, fact}}}), ParseError);
  nlohmann::json unsourced = fact;
  unsourced["source"] = "";
  EXPECT_THROW(load_facts({{"facts", {unsourced}}}), ParseError);
  nlohmann::json unknown = fact;
  unknown["query"] = "no.such.query";
  EXPECT_FALSE(check_fact(S(), load_facts({{"facts", {unknown}}})[0]).passed);
}

}  // namespace
}  // namespace beauville
