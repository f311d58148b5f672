#pragma once

// Check records and the JSON report emitted by the CLI. Reports are
// deterministic given (command, parameters, seed) except for the `ms` timing
// fields; see report.schema.json at the repository root for the schema.

#include <string>
#include <vector>

#include <json.hpp>

namespace qtz {

inline constexpr const char* kToolName = "qtoeplitz";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kGeneratorName = "splitmix64";

enum class CheckStatus { Verified, FalsifiedAsLiteral, Finding, Error };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Verified: return "verified";
        case CheckStatus::FalsifiedAsLiteral: return "falsified-as-literal";
        case CheckStatus::Finding: return "finding";
        default: return "error";
    }
}

struct CheckRecord {
    std::string id;       // stable check identifier; maps 1:1 to the claim
    std::string claim;    // the statement being exercised
    CheckStatus status = CheckStatus::Error;
    CheckStatus expected = CheckStatus::Verified;
    size_t trials = 0;
    nlohmann::ordered_json witness;  // payload: counts, counterexamples, notes
    double ms = 0.0;

    bool passed() const { return status == expected; }
};

struct Report {
    std::string command;
    uint64_t seed = 0;
    nlohmann::ordered_json parameters;  // command-specific knobs (n, trials, ...)
    std::vector<CheckRecord> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }

    int exit_code() const { return all_passed() ? 0 : 1; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["command"] = command;
        j["seed"] = seed;
        j["generator"] = kGeneratorName;
        j["parameters"] = parameters;
        j["checks"] = nlohmann::ordered_json::array();
        size_t verified = 0, falsified = 0, findings = 0, errors = 0, failed = 0;
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["id"] = c.id;
            cj["claim"] = c.claim;
            cj["status"] = to_string(c.status);
            cj["expected"] = to_string(c.expected);
            cj["pass"] = c.passed();
            cj["trials"] = c.trials;
            cj["witness"] = c.witness.is_null() ? nlohmann::ordered_json::object() : c.witness;
            cj["ms"] = c.ms;
            j["checks"].push_back(cj);
            switch (c.status) {
                case CheckStatus::Verified: ++verified; break;
                case CheckStatus::FalsifiedAsLiteral: ++falsified; break;
                case CheckStatus::Finding: ++findings; break;
                default: ++errors; break;
            }
            if (!c.passed()) ++failed;
        }
        j["summary"] = {{"checks", checks.size()},
                        {"verified", verified},
                        {"falsified_as_literal", falsified},
                        {"findings", findings},
                        {"errors", errors},
                        {"failed", failed}};
        j["exit_code"] = exit_code();
        return j;
    }

    std::string human_text() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.passed() ? "[ ok ] " : "[FAIL] ";
            out += c.id + "  " + to_string(c.status);
            if (c.status != c.expected) out += std::string(" (expected ") + to_string(c.expected) + ")";
            if (c.trials) out += "  trials=" + std::to_string(c.trials);
            out += "\n";
        }
        out += all_passed() ? "all checks passed\n" : "CHECK FAILURES PRESENT\n";
        return out;
    }
};

}  // namespace qtz
