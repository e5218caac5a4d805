#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skewfact {

enum class Status { pass, fail, inconclusive };
enum class Evidence { deterministic, randomized };

std::string to_string(Status s);
std::string to_string(Evidence e);

struct CheckLine {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct ScenarioReport {
    std::string scenario;
    Status status = Status::fail;
    Evidence evidence = Evidence::deterministic;
    std::vector<CheckLine> checks;
    std::map<std::string, std::string> witnesses;   // name -> cycle string
    uint64_t seed = 0;
    int64_t elapsed_ms = 0;
    std::map<std::string, std::string> versions;
    std::vector<std::string> notes;
};

// Stable-order JSON document with the fields
// {scenario, status, evidence, checks, witnesses, seed, elapsed_ms, versions}.
std::string report_to_json(const ScenarioReport& rep, int indent = 2);
std::string reports_to_json(const std::vector<ScenarioReport>& reps, int indent = 2);

} // namespace skewfact
