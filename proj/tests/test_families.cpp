#include <doctest.h>

#include "clonoid/errors.hpp"
#include "clonoid/families.hpp"
#include "clonoid/registry.hpp"

using namespace clonoid;

namespace {

const Registry& reg() { return Registry::standard(); }

BooleanFunction byWeight(unsigned n, std::initializer_list<unsigned> weights) {
    return BooleanFunction::fromPredicate(n, [&](std::uint64_t x) {
        const unsigned w = static_cast<unsigned>(__builtin_popcountll(x));
        for (unsigned k : weights)
            if (k == w) return true;
        return false;
    });
}

} // namespace

TEST_CASE("pippenger families") {
    const BooleanFunction f5 = pippengerF(5);
    CHECK(f5.truePoints().size() == 10);
    CHECK_FALSE(f5[0]);
    CHECK_FALSE(f5[31]);
    for (unsigned n = 3; n <= 9; ++n) {
        CHECK(pippengerF(n) == byWeight(n, {1, n - 1}));
        CHECK(pippengerQ(n) == byWeight(n, {1, n}));
    }
    for (unsigned n = 4; n <= 6; ++n) CHECK(innerNegate(pippengerF(n)) == pippengerF(n));
    CHECK(pippengerQ(3).truePoints().size() == 4);
    CHECK(pippengerQ(4)[15]);
    CHECK_FALSE(contains(reg().get("U2"), pippengerQ(4)));
    CHECK(family(parseFamilyKind("q"), 6) == pippengerQ(6));
    CHECK_THROWS(parseFamilyKind("z"));
}

TEST_CASE("monotone witnesses") {
    const BooleanFunction OR = BooleanFunction::disjunction(2);
    std::vector<BooleanFunction> inner{BooleanFunction::projection(2, 1), BooleanFunction::projection(2, 2),
                                       BooleanFunction::constant(2, true), BooleanFunction::constant(2, false)};
    CHECK(compose(witnessM(OR), inner) == OR);
    CHECK(compose(witnessM(OR), recipeM(2)) == OR);
    for (unsigned m = 1; m <= 3; ++m)
        for (const auto& phi : allFunctions(m)) {
            if (!isMonotone(phi) || phi.isConstant()) continue;
            CHECK(contains(reg().get("McUinf"), witnessM(phi)));
            CHECK(compose(witnessM(phi), recipeM(m)) == phi);
            CHECK(compose(witnessMneg(phi), recipeMneg(m)) == phi);
        }
}

TEST_CASE("general witnesses") {
    for (unsigned n = 1; n <= 2; ++n)
        for (const auto& phi : allFunctions(n)) {
            CHECK(compose(witnessAll(phi), recipeAll(n)) == phi);
            CHECK(contains(reg().get("McUinf"), witnessAll(phi)));
            CHECK(compose(witnessOX(phi), recipeOXAll(n)) == phi);
        }
    const BooleanFunction id = BooleanFunction::projection(1, 1);
    CHECK(compose(witnessOX(id), recipeOXAll(1)) == id);
}

TEST_CASE("phi lifts") {
    for (const auto& phi : allFunctions(2)) {
        const BooleanFunction lifted = phiM(phi);
        CHECK(lifted.arity() == 3);
        std::vector<BooleanFunction> inner{BooleanFunction::projection(2, 1), BooleanFunction::projection(2, 2),
                                           BooleanFunction::constant(2, true)};
        CHECK(compose(lifted, inner) == phi);
        CHECK(compose(phiMneg(phi), inner) == innerNegate(phi));
    }
}

TEST_CASE("alpha and beta") {
    const BooleanFunction f5 = pippengerF(5);
    const AlphaBeta ab = alphaBeta(f5);
    CHECK(leq(ab.u, ab.v));
    CHECK(f5[ab.u.index]);
    CHECK_FALSE(f5[ab.v.index]);
    CHECK_FALSE(ab.alpha[3]);
    const BooleanFunction b = ab.beta(2, 1);
    CHECK_FALSE(b[0]);
    CHECK_FALSE(b[2]);
    CHECK_THROWS_AS(alphaBeta(BooleanFunction::conjunction(2)), PreconditionError);
    CHECK_THROWS_AS(alphaBetaPrime(BooleanFunction::disjunction(2)), PreconditionError);
    const AlphaBeta abp = alphaBetaPrime(negate(f5));
    CHECK(abp.primed);
    CHECK(recipeOX(ab, 2).size() == 5);
}

TEST_CASE("projection recipes") {
    for (unsigned m = 1; m <= 3; ++m)
        for (unsigned i = 1; i <= m; ++i) {
            const BooleanFunction f5 = pippengerF(5);
            CHECK(compose(f5, projectionRecipe(f5, m, i, false)) == BooleanFunction::projection(m, i));
            CHECK(compose(f5, projectionRecipe(f5, m, i, true)) == BooleanFunction::negatedProjection(m, i));
        }
    CHECK_THROWS_AS(projectionRecipe(BooleanFunction::conjunction(2), 2, 1, true), PreconditionError);
}

TEST_CASE("theta construction") {
    CHECK(buildTheta(FamilyKind::PippengerF, 5) == pippengerF(7));
    CHECK(buildTheta(FamilyKind::PippengerQ, 5) == pippengerQ(7));
    for (unsigned n = 5; n <= 7; ++n) CHECK(buildTheta(pippengerF(n)) == pippengerF(n + 2));
    for (const auto& S : subsetsOfSize(7, 3)) {
        const auto gs = buildGS(5, S);
        CHECK(gs.size() == 5);
        for (const auto& g : gs) CHECK_FALSE(g[0]);
    }
    CHECK(subsetsOfSize(7, 3).size() == 35);
    CHECK(subsetsOfSize(4, 2).front() == std::set<unsigned>{1, 2});
}
