#include "skewfact/report.hpp"

#include <json.hpp>

namespace skewfact {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(Evidence e) {
    return e == Evidence::deterministic ? "deterministic" : "randomized";
}

namespace {

nlohmann::ordered_json report_doc(const ScenarioReport& rep) {
    nlohmann::ordered_json doc;
    doc["scenario"] = rep.scenario;
    doc["status"] = to_string(rep.status);
    doc["evidence"] = to_string(rep.evidence);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json line;
        line["name"] = c.name;
        line["expected"] = c.expected;
        line["actual"] = c.actual;
        line["ok"] = c.ok;
        checks.push_back(line);
    }
    doc["checks"] = checks;
    doc["witnesses"] = rep.witnesses;
    doc["seed"] = rep.seed;
    doc["elapsed_ms"] = rep.elapsed_ms;
    doc["versions"] = rep.versions;
    if (!rep.notes.empty()) doc["notes"] = rep.notes;
    return doc;
}

} // namespace

std::string report_to_json(const ScenarioReport& rep, int indent) {
    return report_doc(rep).dump(indent);
}

std::string reports_to_json(const std::vector<ScenarioReport>& reps, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reps) arr.push_back(report_doc(r));
    return arr.dump(indent);
}

} // namespace skewfact
