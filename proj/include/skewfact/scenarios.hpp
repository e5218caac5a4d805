#pragma once

#include "skewfact/group.hpp"
#include "skewfact/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace skewfact {

struct ScenarioContext;

struct Scenario {
    std::string id;
    Evidence required = Evidence::deterministic;    // randomized = randomized-ok
    std::function<void(ScenarioContext&)> run;
};

struct ScenarioOptions {
    uint64_t seed = 1729;
    Limits limits;
    bool extended = false;                          // adds larger parameters
    std::optional<uint32_t> row4_m;                 // parameter overrides
    std::optional<uint32_t> row6_m;                 // lemma31 parameter (even >= 6)
    std::optional<uint32_t> row8_m;
    std::optional<uint32_t> theorem2_m;             // m/2 even >= 4
};

// The registry: every catalogue row, search lemma item, and theorem2 case.
std::vector<Scenario> scenario_registry(const ScenarioOptions& opt);

std::vector<std::string> default_scenario_ids(const ScenarioOptions& opt);

// Runs the selected scenarios sequentially with per-scenario rng seeded from
// (seed, id). Unknown ids raise input_error.
std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& ids,
                                          const ScenarioOptions& opt);

bool all_pass(const std::vector<ScenarioReport>& reps);
bool any_fail(const std::vector<ScenarioReport>& reps);

} // namespace skewfact
