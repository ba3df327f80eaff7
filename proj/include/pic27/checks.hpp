#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pic27 {

struct Config {
    bool has_omega = false;   // base field contains a nontrivial cube root of unity
    std::uint64_t seed = 42;  // randomized property checks
    int samples = 1000;
};

struct CheckResult {
    std::string check_id;
    std::string paper_anchor; // one-line statement of the verified fact
    std::string status;       // "pass" | "fail" | "error"
    nlohmann::json witness;
    std::int64_t elapsed_ms = 0;
};

struct Report {
    std::string tool_version;
    Config configuration;
    std::vector<CheckResult> checks;
    std::string overall; // "pass" iff every check passed
};

class unknown_check_error : public std::invalid_argument {
public:
    explicit unknown_check_error(const std::string& id)
        : std::invalid_argument("unknown check id: " + id) {}
};

using CheckFn = std::function<std::pair<bool, nlohmann::json>(const Config&)>;

struct CheckInfo {
    std::string id;
    std::string anchor;
    CheckFn fn;
};

// The registered checks, one per verified statement, in canonical order.
const std::vector<CheckInfo>& check_registry();

std::vector<std::string> all_check_ids();

// Runs the given checks in order (ids validated up front; throws
// unknown_check_error otherwise). Deterministic for a fixed configuration
// up to the elapsed_ms fields.
Report run(const std::vector<std::string>& ids, const Config& config);

nlohmann::json to_json(const Report& report);

std::string render_text(const Report& report);

} // namespace pic27
