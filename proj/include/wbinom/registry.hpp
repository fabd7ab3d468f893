#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wbinom {

// Size/trial overrides for a single identity check. Every field is optional:
// a missing value means the check's registered default (usually a whole range
// of sizes, pinned to one value when given).
struct CheckConfig {
    std::optional<int> n, m, k, l;
    std::optional<int> trials;
    std::optional<double> tol;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string identity;
    nlohmann::json params;                    // effective sizes and weights
    long trials = 0;                          // instances checked
    std::optional<double> max_residual;       // empty <=> exact-zero check
    bool pass = false;
    long long millis = 0;
};

struct IdentityCheck {
    std::string name;
    std::string summary;
    std::function<CheckResult(const CheckConfig&)> run;
};

// All verification checks, sorted by name.
const std::vector<IdentityCheck>& identity_registry();
const IdentityCheck* find_identity(std::string_view name);

nlohmann::json check_result_json(const CheckResult& r, bool timing);

// Runs every check with the given seed; returns the JSON report text and
// whether everything passed. Deterministic byte-for-byte unless timing.
std::pair<std::string, bool> run_report(std::uint64_t seed, bool timing);

} // namespace wbinom
