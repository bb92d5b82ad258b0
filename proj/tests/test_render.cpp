#include <doctest.h>

#include <string>

#include "adlv/errors.hpp"
#include "adlv/gu_strata.hpp"
#include "adlv/render.hpp"
#include "adlv_fixtures.hpp"

using namespace adlv;

TEST_SUITE("render")
{
  TEST_CASE("json round trip")
  {
    for (int n = 2; n <= 14; ++n) {
      auto records = all_records(n);
      nlohmann::json j = to_json(n, records);
      CHECK(j["schema"] == json_schema_version);
      CHECK(j["n"] == n);
      CHECK(records_from_json(j) == records);
      CHECK(records_from_json(nlohmann::json::parse(j.dump())) == records);
    }
  }

  TEST_CASE("json for n=5")
  {
    nlohmann::json j = to_json(5, all_records(5));
    REQUIRE(j["strata"].is_array());
    CHECK(j["strata"].size() == 10);
    int nonempty = 0;
    for (auto const &s : j["strata"])
      if (s["class"] != "empty")
        ++nonempty;
    CHECK(nonempty == 6);
  }

  TEST_CASE("malformed json")
  {
    CHECK_THROWS_AS(records_from_json(nlohmann::json::object()), Error);
    nlohmann::json j = to_json(5, all_records(5));
    j["strata"][0]["class"] = "maybe";
    CHECK_THROWS_AS(records_from_json(j), Error);
    j = to_json(5, all_records(5));
    j["schema"] = 99;
    CHECK_THROWS_AS(records_from_json(j), Error);
  }

  TEST_CASE("dot")
  {
    for (int n : {2, 5, 13, 14}) {
      std::string dot = render_dot(stratum_graph(n));
      CHECK(dot_well_formed(dot));
      CHECK(dot.find("digraph \"strata_n" + std::to_string(n) + "\"") != std::string::npos);
    }
    std::string dot = render_dot(stratum_graph(13));
    CHECK(dot.find("\"w_7_12\" -> \"w_7_10\"") != std::string::npos);
    CHECK_FALSE(dot_well_formed("digraph { \"a\" -> "));
    CHECK_FALSE(dot_well_formed(""));
  }

  TEST_CASE("table")
  {
    std::string table = render_table(13, all_records(13));
    CHECK(table.find("w_{7,12}") != std::string::npos);
    CHECK(table.find("not_dl") != std::string::npos);
  }

  TEST_CASE("figures")
  {
    CHECK(render_figure(stratum_graph(13)) == fixtures::strata_n13);
    CHECK(render_figure(stratum_graph(14)) == fixtures::strata_n14);
  }
}
