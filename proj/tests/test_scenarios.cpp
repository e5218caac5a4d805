#include "skewfact/scenarios.hpp"

#include "skewfact/errors.hpp"
#include "skewfact/report.hpp"

#include <doctest.h>

#include <regex>

using namespace skewfact;

TEST_CASE("registry covers every row, item, and case") {
    ScenarioOptions opt;
    auto ids = default_scenario_ids(opt);
    auto has = [&](const std::string& id) {
        return std::find(ids.begin(), ids.end(), id) != ids.end();
    };
    CHECK(has("table1.row1"));
    CHECK(has("table1.row2"));
    CHECK(has("table1.row3"));
    CHECK(has("table1.row4.m2"));
    CHECK(has("table1.row4.m3"));
    CHECK(has("table1.row5"));
    CHECK(has("table1.row6.m6"));
    CHECK(has("table1.row7"));
    CHECK(has("table1.row8.m2"));
    CHECK(has("lemma24.item1"));
    CHECK(has("lemma24.item2"));
    CHECK(has("lemma24.item3"));
    CHECK(has("lemma24.item4"));
    CHECK(has("theorem2.case2.m8"));
    CHECK(has("theorem2.case11"));
    CHECK(has("theorem2.case12"));
    CHECK(has("theorem2.case13"));
    CHECK(has("prop-skew.psl211"));
    CHECK(has("prop-skew.m23"));
    CHECK(has("prop-skew.a7"));
}

TEST_CASE("unknown ids are rejected") {
    ScenarioOptions opt;
    CHECK_THROWS_AS(run_scenarios({"table1.row9"}, opt), input_error);
}

TEST_CASE("fast scenarios pass") {
    ScenarioOptions opt;
    auto reps = run_scenarios({"table1.row1", "table1.row5", "theorem2.case12",
                               "prop-skew.psl211", "prop-skew.a7", "lemma24.item4"},
                              opt);
    for (const auto& r : reps) {
        INFO(r.scenario);
        for (const auto& c : r.checks) {
            INFO(c.name << " expected " << c.expected << " actual " << c.actual);
            CHECK(c.ok);
        }
        CHECK(r.status == Status::pass);
        CHECK(r.evidence == Evidence::deterministic);
    }
}

TEST_CASE("reports serialize with the full field set") {
    ScenarioOptions opt;
    auto reps = run_scenarios({"table1.row1"}, opt);
    std::string json = report_to_json(reps[0]);
    for (const char* field : {"\"scenario\"", "\"status\"", "\"evidence\"", "\"checks\"",
                              "\"witnesses\"", "\"seed\"", "\"elapsed_ms\"", "\"versions\""})
        CHECK(json.find(field) != std::string::npos);
    CHECK(json.find("\"library\"") != std::string::npos);
    CHECK(json.find("table1.row1") != std::string::npos);
}

TEST_CASE("same seed gives identical reports modulo timing") {
    ScenarioOptions opt;
    opt.seed = 99;
    std::vector<std::string> ids = {"table1.row1", "table1.row5", "theorem2.case13"};
    auto a = run_scenarios(ids, opt);
    auto b = run_scenarios(ids, opt);
    for (auto* reps : {&a, &b})
        for (auto& r : *reps) r.elapsed_ms = 0;
    CHECK(reports_to_json(a) == reports_to_json(b));
}

TEST_CASE("different seeds still verify") {
    ScenarioOptions opt;
    opt.seed = 31337;
    auto reps = run_scenarios({"table1.row1"}, opt);
    CHECK(reps[0].status == Status::pass);
}
