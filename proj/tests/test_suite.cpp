#include <doctest.h>

#include "clonoid/engine.hpp"
#include "clonoid/errors.hpp"
#include "clonoid/families.hpp"
#include "clonoid/kernels.hpp"
#include "clonoid/suite.hpp"

#include <random>

using namespace clonoid;

namespace {

/// All affine inner tuples, tried directly.
bool affineBrute(const BooleanFunction& outer, const BooleanFunction& target) {
    const FunctionSet L = arityPart(Registry::standard().get("L"), target.arity());
    std::vector<std::uint64_t> pool;
    for (const auto& g : L) pool.push_back(g.word0());
    return findInnerTuple(outer, pool, target.arity(), target.word0()).has_value();
}

} // namespace

TEST_CASE("catalog is sorted and complete") {
    const auto& cat = checkCatalog();
    CHECK(cat.size() == 17);
    for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].id < cat[i].id);
    CHECK(findCheck("theta-lemma") != nullptr);
    CHECK(findCheck("nope") == nullptr);
    CHECK_THROWS_AS(runCheck("nope"), DomainError);
}

TEST_CASE("single checks") {
    CHECK(runCheck("theta-lemma").passed());
    const CheckReport imc = runCheck("prop-imcuinf");
    CHECK(imc.passed());
    CHECK(imc.statistics.at("distinctSets") == 7);
    CHECK(runCheck("fn-omega1-lemma", {}, {{"m", 5}, {"n", 6}}).passed());
    CHECK(runCheck("qn-istar-lemma").passed());
}

TEST_CASE("budget gating") {
    SuiteConfig cfg;
    cfg.budget = 1000;
    const CheckReport r = runCheck("prop-vomcuinf", cfg);
    CHECK((r.status == CheckStatus::SkippedBudget));
    CHECK(r.statistics.at("estimatedCost") > 1000);
    const SuiteReport all = runAll(cfg);
    CHECK_FALSE(all.anyFail());
    CHECK(all.countStatus(CheckStatus::SkippedBudget) > 0);
    CHECK(all.toJson().dump().find("bounded verification") != std::string::npos);
}

TEST_CASE("mutated fixture is caught") {
    SuiteConfig cfg;
    BooleanFunction f = pippengerF(5);
    f.set(3, !f[3]);
    cfg.fixtures["f5"] = f;
    const CheckReport r = runCheck("theta-lemma", cfg);
    CHECK((r.status == CheckStatus::Fail));
    REQUIRE(r.counterexample.is_object());
    const auto point = r.counterexample.at("point").get<std::uint64_t>();
    CHECK(parse(r.counterexample.at("function").get<std::string>())[point] != pippengerF(5)[point]);
}

TEST_CASE("reports are reproducible without timing") {
    SuiteConfig cfg;
    cfg.seed = 17;
    const auto a = runChecks({"prop-uk", "theta-lemma"}, cfg).toJson();
    const auto b = runChecks({"theta-lemma", "prop-uk"}, cfg).toJson();
    CHECK(a == b);
    CHECK(a.at("config").at("seed") == 17);
    CHECK(a.at("suiteVersion") == kSuiteVersion);
    CHECK(a.at("checks").at(0).at("checkId") == "prop-uk");
    CHECK_FALSE(a.at("checks").at(0).at("statistics").contains("wallMs"));
    cfg.timing = true;
    CHECK(runChecks({"theta-lemma"}, cfg).toJson().at("checks").at(0).at("statistics").contains("wallMs"));
}

TEST_CASE("affine search agrees with brute force") {
    std::mt19937_64 rng(31);
    const std::vector<BooleanFunction> outers{pippengerF(3), pippengerQ(3), pippengerF(4),
                                              BooleanFunction::conjunction(2), BooleanFunction::parity(3)};
    for (const auto& outer : outers)
        for (int t = 0; t < 40; ++t) {
            const unsigned n = 2 + rng() % 2;
            const BooleanFunction target = BooleanFunction::fromWord(n, rng() & tailMask(n));
            const auto inner = findAffineInner(outer, target);
            CHECK(inner.has_value() == affineBrute(outer, target));
            if (inner) CHECK(compose(outer, *inner) == target);
        }
}

TEST_CASE("monotone minor criterion") {
    for (unsigned n = 4; n <= 6; ++n) {
        CHECK(altNumber(pippengerF(n)) == 4);
        CHECK(altNumber(negate(pippengerF(n))) == 4);
    }
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const unsigned a = 1 + rng() % 3, b = 1 + rng() % 3;
        const BooleanFunction f = BooleanFunction::fromWord(a, rng() & tailMask(a));
        const BooleanFunction g = BooleanFunction::fromWord(b, rng() & tailMask(b));
        CHECK(altCriterionMinor(f, g) == monotoneMinorBrute(f, g));
    }
}

TEST_CASE("affine lemma samples under a tight budget") {
    SuiteConfig cfg;
    cfg.budget = 3'000'000;
    const CheckReport r = runCheck("lemma-fml", cfg);
    if (r.status != CheckStatus::SkippedBudget) {
        CHECK(r.passed());
        CHECK(r.statistics.count("pairsSampled") == 1);
    }
}
