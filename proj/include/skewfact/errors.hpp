#pragma once

#include <stdexcept>
#include <string>

namespace skewfact {

// Bad user input: malformed cycle strings, invalid group-spec parameters,
// overlapping cycles, unknown scenario ids.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation refused because it would exceed a configured size limit
// (enumeration, orbit, or small-subgroup threshold).
struct over_threshold : std::runtime_error {
    explicit over_threshold(const std::string& msg) : std::runtime_error(msg) {}
};

// Coset-action index exceeds the configured cap.
struct index_too_large : std::runtime_error {
    explicit index_too_large(const std::string& msg) : std::runtime_error(msg) {}
};

// Fixture file missing, malformed, or failing its integrity check.
struct fixture_error : std::runtime_error {
    explicit fixture_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace skewfact
