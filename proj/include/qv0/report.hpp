#pragma once

// Machine-readable verification results.  JSON layout (keys are stable):
//
// {"suite": string,
//  "checks": [{"name": string, "status": "pass"|"fail", "order": integer,
//              "modulus": integer|null, "cleared_multiplier": integer|null,
//              "first_failure": {"n": integer, "expected": string,
//                                "actual": string}|null}],
//  "elapsed_ms": integer}

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qv0 {

struct FirstFailure {
    std::int64_t n = 0;
    std::string expected;
    std::string actual;

    bool operator==(const FirstFailure&) const = default;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::int64_t order = 0;
    std::optional<std::int64_t> modulus;
    std::optional<std::int64_t> cleared_multiplier;
    std::optional<FirstFailure> first_failure;

    bool operator==(const CheckResult&) const = default;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    std::int64_t elapsed_ms = 0;

    bool operator==(const Report&) const = default;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    // Deterministic ordering regardless of how checks were produced.
    void sort_checks();
    void merge(Report other);
};

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
std::string report_to_text(const Report& r);

}  // namespace qv0
