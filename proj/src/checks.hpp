#pragma once

#include "clonoid/suite.hpp"

#include <random>
#include <string>

namespace clonoid::checks {

CheckReport fnOmega1Lemma(const SuiteConfig& cfg);
CheckReport qnIstarLemma(const SuiteConfig& cfg);
CheckReport propOmega1Omega1(const SuiteConfig& cfg);
CheckReport propOmega1Lambda(const SuiteConfig& cfg);
CheckReport propI0I1Uinf(const SuiteConfig& cfg);
CheckReport propIstarUinf(const SuiteConfig& cfg);
CheckReport lemmaFml(const SuiteConfig& cfg);
CheckReport lemmaFnV(const SuiteConfig& cfg);
CheckReport propFiVj(const SuiteConfig& cfg);
CheckReport thetaLemma(const SuiteConfig& cfg);
CheckReport propUkHom(const SuiteConfig& cfg);
CheckReport propUk(const SuiteConfig& cfg);

CheckReport propIMcUinf(const SuiteConfig& cfg);
CheckReport propVoMcUinf(const SuiteConfig& cfg);
CheckReport tableStability(const SuiteConfig& cfg);
CheckReport dualityKnid(const SuiteConfig& cfg);
CheckReport dmLemmas(const SuiteConfig& cfg);

std::uint64_t lemmaFmlFullCost();

/// Generator for sampling checks: the configured seed mixed with the check id.
std::mt19937_64 rngFor(const SuiteConfig& cfg, const std::string& checkId);

} // namespace clonoid::checks
