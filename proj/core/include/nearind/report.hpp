#ifndef NEARIND_REPORT_HPP
#define NEARIND_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nearind {

/// Outcome of one mechanical check. Counterexamples are graph6 strings.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    std::vector<std::string> counterexamples;
    nlohmann::json data = nlohmann::json::object();

    void fail(std::string graph6) {
        passed = false;
        counterexamples.push_back(std::move(graph6));
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool passed() const noexcept {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

void to_json(nlohmann::json& j, const CheckResult& c);
void to_json(nlohmann::json& j, const Report& r);

}  // namespace nearind

#endif  // NEARIND_REPORT_HPP
