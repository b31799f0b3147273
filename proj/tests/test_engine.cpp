#include <doctest.h>

#include "clonoid/engine.hpp"
#include "clonoid/errors.hpp"
#include "clonoid/families.hpp"
#include "clonoid/kernels.hpp"

#include <random>

using namespace clonoid;

namespace {

const Registry& reg() { return Registry::standard(); }
const BooleanFunction AND = BooleanFunction::conjunction(2);
const BooleanFunction OR = BooleanFunction::disjunction(2);
const BooleanFunction P1 = BooleanFunction::projection(2, 1);
const BooleanFunction P2 = BooleanFunction::projection(2, 2);

FunctionSet gen(FunctionSet F, const std::string& c1, const std::string& c2, unsigned m) {
    GenerationRequest req;
    req.generators = std::move(F);
    req.sourceClone = c1;
    req.targetClone = c2;
    req.outputArity = m;
    return generateClonoid(req);
}

} // namespace

TEST_CASE("right composition") {
    CHECK(rightCompose({AND}, reg().get("Ic"), 2) == FunctionSet{P1, P2, AND});
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const unsigned n = 1 + rng() % 3;
        const BooleanFunction f = BooleanFunction::fromWord(n, rng() & tailMask(n));
        CHECK(rightCompose({f}, reg().get("Ic"), n).contains(f));
    }
    const FunctionSet c = rightCompose({pippengerF(5)}, reg().get("Omega1"), 5);
    CHECK(c.contains(pippengerF(5)));
    CHECK(c.contains(BooleanFunction::projection(5, 1)));
}

TEST_CASE("parallel and reference kernels agree") {
    std::mt19937_64 rng(2);
    for (const char* id : {"Ic", "Istar", "Omega1", "V", "L", "M", "U2"})
        for (int t = 0; t < 5; ++t) {
            const unsigned n = 1 + rng() % 3, m = 1 + rng() % 3;
            const FunctionSet F{BooleanFunction::fromWord(n, rng() & tailMask(n))};
            CHECK(rightCompose(F, reg().get(id), m) == rightComposeReference(F, reg().get(id), m));
        }
    for (unsigned m = 1; m <= 6; ++m) {
        std::vector<std::uint64_t> pool;
        for (const auto& h : arityPart(reg().get("Omega1"), m)) pool.push_back(h.word0());
        const auto a = scanCompositesSerial(pippengerF(4), pool, m);
        const auto b = scanCompositesParallel(pippengerF(4), pool, m);
        CHECK(a.composites == b.composites);
        CHECK(b.evaluations <= a.evaluations);
    }
}

TEST_CASE("left closure") {
    CHECK(leftClose({AND, P1, P2}, reg().get("Ic")) == FunctionSet{AND, P1, P2});
    CHECK(leftClose({P1}, reg().get("Lambda")) ==
          FunctionSet{P1, BooleanFunction::constant(2, false), BooleanFunction::constant(2, true)});
    CHECK(leftClose({P1, P2}, reg().get("V")) ==
          FunctionSet{P1, P2, OR, BooleanFunction::constant(2, false), BooleanFunction::constant(2, true)});
}

TEST_CASE("left strategies agree where exact") {
    std::mt19937_64 rng(4);
    for (const char* id : {"Lambda", "V", "M", "L0", "Istar"})
        for (int t = 0; t < 5; ++t) {
            const unsigned m = 1 + rng() % 3;
            std::vector<BooleanFunction> G;
            for (int i = 0; i < 2; ++i) G.push_back(BooleanFunction::fromWord(m, rng() & tailMask(m)));
            CHECK(leftClose(FunctionSet(G), reg().get(id), LeftStrategy::Generators) ==
                  leftClose(FunctionSet(G), reg().get(id), LeftStrategy::ExtensionFilter));
        }
}

TEST_CASE("generation") {
    CHECK(gen({AND}, "Ic", "Ic", 2) == FunctionSet{P1, P2, AND});
    std::mt19937_64 rng(6);
    const auto& clones = reg().clones();
    for (int t = 0; t < 30; ++t) {
        const std::string c1 = clones[rng() % clones.size()].id, c2 = clones[rng() % clones.size()].id;
        const unsigned m = 1 + rng() % 3;
        const FunctionSet F{BooleanFunction::fromWord(2, rng() & tailMask(2))};
        const FunctionSet K = gen(F, c1, c2, m);
        CHECK(gen(K, c1, c2, m) == K);
    }
    CHECK_FALSE(gen({pippengerF(6)}, "Omega1", "Omega1", 5).contains(pippengerF(5)));
}

TEST_CASE("membership") {
    const auto& O = reg().get("Omega1");
    CHECK((isClonoidMember(pippengerF(5), {pippengerF(5)}, O, O) == Verdict::True));
    CHECK((isClonoidMember(pippengerF(5), {pippengerF(6)}, reg().get("I0"), reg().get("Uinf")) == Verdict::False));
    CHECK((isClonoidMember(pippengerQ(3), {pippengerQ(4)}, reg().get("Istar"), reg().get("Uinf")) == Verdict::False));
}

TEST_CASE("membership agrees with generation") {
    std::mt19937_64 rng(8);
    const auto& clones = reg().clones();
    for (int t = 0; t < 20; ++t) {
        const auto& c1 = clones[rng() % clones.size()];
        const auto& c2 = clones[rng() % clones.size()];
        const FunctionSet F{BooleanFunction::fromWord(2, rng() & tailMask(2))};
        const FunctionSet K = gen(F, c1.id, c2.id, 2);
        for (const auto& f : allFunctions(2))
            CHECK((isClonoidMember(f, F, c1, c2) == Verdict::True) == K.contains(f));
    }
}

TEST_CASE("stability") {
    const auto M = FunctionClass::fromClone(reg().get("M"));
    CHECK(isStable(M, reg().get("I"), reg().get("McUinf"), 3, 3).passed());
    const auto vak0 = FunctionClass::fromPredicate("Vak0", [](const BooleanFunction& f) { return f.isConstant(false); });
    CHECK(isStable(vak0, reg().get("I"), reg().get("McUinf"), 3, 3).passed());
    const auto orOnly = FunctionClass::fromSet("or", {OR});
    const CheckReport rep = isStable(orOnly, reg().get("Ic"), reg().get("Ic"), 2, 2);
    CHECK((rep.status == CheckStatus::Fail));
    CHECK(rep.counterexample.contains("composite"));
}

TEST_CASE("transforms") {
    const FunctionSet K{AND, BooleanFunction::conjunction(3), pippengerF(4)};
    CHECK(transformSet(transformSet(K, TransformKind::Dual), TransformKind::Dual) == K);
    CHECK(transformSet({AND, BooleanFunction::conjunction(3)}, TransformKind::Dual) ==
          FunctionSet{OR, BooleanFunction::disjunction(3)});
    const FunctionSet once = transformSet(K, TransformKind::UnionNegations);
    CHECK(transformSet(once, TransformKind::UnionNegations) == once);
}

TEST_CASE("cost estimates") {
    GenerationRequest req;
    req.generators = {pippengerF(6)};
    req.sourceClone = "Omega1";
    req.targetClone = "Omega1";
    req.outputArity = 5;
    CHECK(estimateCost(req) == 2'985'984);
    req.generators = {AND};
    req.sourceClone = req.targetClone = "Ic";
    req.outputArity = 2;
    CHECK(estimateCost(req) == 4);
    req.generators = {pippengerF(5)};
    req.sourceClone = "Lc";
    req.targetClone = "Lambdac";
    req.outputArity = 7;
    CHECK(estimateCost(req) == 1'073'741'824);
    CHECK(estimateCost(req) > kDefaultBudget);
    CHECK_THROWS_AS(generateClonoid(req), BudgetExceeded);
}
