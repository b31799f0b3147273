#pragma once

#include "clonoid/bf.hpp"
#include "clonoid/registry.hpp"
#include "clonoid/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clonoid {

inline constexpr const char* kSuiteVersion = "1.0.0";

struct SuiteConfig {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    unsigned arityCap = 16;
    bool timing = false; ///< include wall times in JSON
    /// Replacements for named fixtures ("f5", "q5") used by theta-lemma.
    std::map<std::string, BooleanFunction> fixtures;
    /// Per-run narrowing for a single check, e.g. {"m": 5, "n": 6}; empty for the full catalog entry.
    nlohmann::json params = nlohmann::json::object();

    BooleanFunction fixture(const std::string& name) const;
    nlohmann::json toJson() const;
};

struct CheckInfo {
    std::string id;
    std::string summary;
    /// Estimated elementary evaluations; a check is skipped when this exceeds the budget.
    std::function<std::uint64_t(const SuiteConfig&)> cost;
    std::function<CheckReport(const SuiteConfig&)> run;
};

/// The catalog, sorted by id.
const std::vector<CheckInfo>& checkCatalog();
const CheckInfo* findCheck(const std::string& id);

/// Runs one check with budget gating; unknown ids throw DomainError.
CheckReport runCheck(const std::string& id, const SuiteConfig& cfg = {});
CheckReport runCheck(const std::string& id, const SuiteConfig& cfg, const nlohmann::json& params);

struct SuiteReport {
    std::string suiteVersion = kSuiteVersion;
    SuiteConfig config;
    std::vector<CheckReport> checks; ///< sorted by checkId

    bool anyFail() const;
    std::size_t countStatus(CheckStatus s) const;
    nlohmann::json toJson() const;
};

SuiteReport runChecks(const std::vector<std::string>& ids, const SuiteConfig& cfg = {});
SuiteReport runAll(const SuiteConfig& cfg = {});

/*! \brief Affine inner maps for a fixed outer function.

  Searches g = (g_1, ..., g_m) with every g_i affine of arity n and outer(g) = target,
  by choosing g(0) and then g on each unit vector and checking every tuple the
  choices determine. Returns the inner functions, or nullopt when none exist.
  `nodes` receives the number of partial assignments visited.
*/
std::optional<std::vector<BooleanFunction>> findAffineInner(const BooleanFunction& outer,
                                                            const BooleanFunction& target,
                                                            std::uint64_t* nodes = nullptr);

/// Alternation-number criterion for f being a monotone minor of g.
bool altCriterionMinor(const BooleanFunction& f, const BooleanFunction& g);
/// f ∈ {g} M^(arity f) by enumerating every inner tuple (arities <= 3 for f).
bool monotoneMinorBrute(const BooleanFunction& f, const BooleanFunction& g);

} // namespace clonoid
