#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace clonoid {

enum class CheckStatus { Pass, Fail, Indeterminate, SkippedBudget };

std::string toString(CheckStatus s);

/// Outcome of one verification: status, counters and an optional counterexample.
struct CheckReport {
    std::string checkId;
    CheckStatus status = CheckStatus::Pass;
    std::map<std::string, std::int64_t> statistics;
    nlohmann::json counterexample; // null unless a violation was found
    std::vector<std::string> notes;
    double wallMs = 0.0;

    bool passed() const noexcept { return status == CheckStatus::Pass; }
    void fail(nlohmann::json cex) {
        status = CheckStatus::Fail;
        counterexample = std::move(cex);
    }
    void count(const std::string& key, std::int64_t n = 1) { statistics[key] += n; }

    /// JSON form; wall time only when `withTiming` is set so default output is reproducible.
    nlohmann::json toJson(bool withTiming = false) const;
};

} // namespace clonoid
