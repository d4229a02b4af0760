#include <doctest.h>

#include <json.hpp>

#include "outerpath/errors.hpp"
#include "outerpath/report.hpp"

using namespace outerpath;
using nlohmann::json;

TEST_CASE("search report JSON") {
  const SearchReport r = extremal_value(5, 3, {1, true});
  const json j = json::parse(to_json({r}, false));
  CHECK(j["schema"] == "outerpath/1");
  CHECK(j["command"] == "search");
  CHECK(j["results"][0]["n"] == 5);
  CHECK(j["results"][0]["max_copies"] == 6);
  CHECK(j["results"][0]["witness_count"] == r.witnesses.size());
  CHECK(j["results"][0]["witnesses"].size() == r.witnesses.size());
  CHECK_FALSE(j["results"][0].contains("elapsed_seconds"));
  CHECK(json::parse(to_json({r}, true))["results"][0].contains("elapsed_seconds"));
  CHECK_FALSE(json::parse(to_json({r}, false, false))["results"][0].contains("witnesses"));
  CHECK(to_json({r}, false) == to_json({extremal_value(5, 3, {3, true})}, false));
}

TEST_CASE("CSV rows") {
  const SearchReport r = extremal_value(6, 3, {1, true});
  CHECK(search_csv_header() == "n,k,max_copies,witness_count,graphs_scanned,triangulations\n");
  CHECK(to_csv_row(r) == "6,3,10,2,7168,14\n");
}

TEST_CASE("count and construction JSON") {
  const json c = json::parse(to_json(PathCount{3, 15}, 7));
  CHECK(c["schema"] == "outerpath/1");
  CHECK(c["copies"] == 15);
  CHECK(c["n"] == 7);
  const ConstructionSpec spec{ConstructionKind::g_t, 0, 4};
  const json g = json::parse(to_json(build(spec), spec));
  CHECK(g["kind"] == "g_t");
  CHECK(g["n"] == 6);
  CHECK(g["edge_count"] == 7);
  CHECK(g["order"].size() == 6);
}

TEST_CASE("check names and aliases") {
  const auto names = verify_check_names();
  CHECK(names.size() == 11);
  CHECK(resolve_check_name("lemma22") == "tree_cut");
  CHECK(resolve_check_name("sandwich") == "sandwich");
  CHECK_THROWS_AS(resolve_check_name("nope"), InvalidArgument);
}

TEST_CASE("filtered verification runs only the requested check") {
  const VerifyReport r = run_verify({{"lemma22"}, 1});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].name == "tree_cut");
  CHECK(r.all_passed());
  const json j = json::parse(to_json(r, false));
  CHECK(j["schema"] == "outerpath/1");
  CHECK(j["summary"]["total"] == 1);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("elapsed_seconds"));
  CHECK(to_json(r, false) == to_json(run_verify({{"tree_cut"}, 1}), false));
}
