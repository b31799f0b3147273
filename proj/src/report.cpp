#include "clonoid/report.hpp"

namespace clonoid {

std::string toString(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
    case CheckStatus::SkippedBudget: return "skipped-budget";
    }
    return "unknown";
}

nlohmann::json CheckReport::toJson(bool withTiming) const {
    nlohmann::json j;
    j["checkId"] = checkId;
    j["status"] = toString(status);
    nlohmann::json stats = nlohmann::json::object();
    for (const auto& [k, v] : statistics) stats[k] = v;
    if (withTiming) stats["wallMs"] = wallMs;
    j["statistics"] = stats;
    if (!counterexample.is_null()) j["counterexample"] = counterexample;
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

} // namespace clonoid
