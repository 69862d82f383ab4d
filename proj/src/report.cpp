#include "qv0/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace qv0 {

void Report::sort_checks() {
    std::sort(checks.begin(), checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

void Report::merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
    elapsed_ms += other.elapsed_ms;
}

std::string report_to_json(const Report& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["order"] = c.order;
        jc["modulus"] = c.modulus ? nlohmann::json(*c.modulus) : nlohmann::json(nullptr);
        jc["cleared_multiplier"] =
            c.cleared_multiplier ? nlohmann::json(*c.cleared_multiplier) : nlohmann::json(nullptr);
        if (c.first_failure) {
            jc["first_failure"] = {{"n", c.first_failure->n},
                                   {"expected", c.first_failure->expected},
                                   {"actual", c.first_failure->actual}};
        } else {
            jc["first_failure"] = nullptr;
        }
        j["checks"].push_back(std::move(jc));
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump(2);
}

Report report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    for (const auto& jc : j.at("checks")) {
        CheckResult c;
        c.name = jc.at("name").get<std::string>();
        c.pass = jc.at("status").get<std::string>() == "pass";
        c.order = jc.at("order").get<std::int64_t>();
        if (!jc.at("modulus").is_null()) c.modulus = jc.at("modulus").get<std::int64_t>();
        if (!jc.at("cleared_multiplier").is_null())
            c.cleared_multiplier = jc.at("cleared_multiplier").get<std::int64_t>();
        if (!jc.at("first_failure").is_null()) {
            FirstFailure f;
            f.n = jc.at("first_failure").at("n").get<std::int64_t>();
            f.expected = jc.at("first_failure").at("expected").get<std::string>();
            f.actual = jc.at("first_failure").at("actual").get<std::string>();
            c.first_failure = std::move(f);
        }
        r.checks.push_back(std::move(c));
    }
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& c : r.checks) {
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (order " << c.order;
        if (c.modulus) out << ", mod " << *c.modulus;
        if (c.cleared_multiplier) out << ", cleared x" << *c.cleared_multiplier;
        out << ")";
        if (c.first_failure)
            out << "  first failure at n=" << c.first_failure->n << ": expected "
                << c.first_failure->expected << ", got " << c.first_failure->actual;
        out << "\n";
        if (c.pass) ++passed;
    }
    out << "suite " << r.suite << ": " << passed << "/" << r.checks.size() << " passed in "
        << r.elapsed_ms << " ms\n";
    return out.str();
}

}  // namespace qv0
