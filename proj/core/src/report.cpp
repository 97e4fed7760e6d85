#include "nearind/report.hpp"

namespace nearind {

void to_json(nlohmann::json& j, const CheckResult& c) {
    j = nlohmann::json{{"name", c.name},
                       {"status", c.passed ? "pass" : "fail"},
                       {"detail", c.detail},
                       {"counterexamples", c.counterexamples}};
    if (!c.data.empty()) j["data"] = c.data;
}

void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"status", r.passed() ? "pass" : "fail"}, {"checks", r.checks}};
}

}  // namespace nearind
