#include <doctest.h>

#include "clonoid/bf.hpp"
#include "clonoid/errors.hpp"
#include "clonoid/families.hpp"
#include "clonoid/registry.hpp"

#include <random>

using namespace clonoid;

namespace {

const BooleanFunction AND = BooleanFunction::conjunction(2);
const BooleanFunction OR = BooleanFunction::disjunction(2);

BooleanFunction randomFunction(std::mt19937_64& rng, unsigned n) {
    return BooleanFunction::fromPredicate(n, [&](std::uint64_t) { return (rng() & 1u) != 0; });
}

} // namespace

TEST_CASE("evaluate") {
    CHECK(evaluate(BooleanFunction::projection(1, 1), BitTuple::fromBits({1})));
    CHECK_FALSE(evaluate(AND, BitTuple::fromBits({1, 0})));
    CHECK(evaluate(pippengerF(5), BitTuple::fromBits({0, 0, 0, 1, 0})));
    CHECK_THROWS_AS(evaluate(AND, BitTuple::fromBits({1})), ArityMismatch);
}

TEST_CASE("compose") {
    const BooleanFunction f5 = pippengerF(5);
    std::vector<BooleanFunction> prs;
    for (unsigned i = 1; i <= 5; ++i) prs.push_back(BooleanFunction::projection(5, i));
    CHECK(compose(f5, prs) == f5);
    CHECK(compose(AND, {BooleanFunction::projection(2, 2), BooleanFunction::projection(2, 1)}) == AND);
    CHECK(compose(AND, {BooleanFunction::projection(2, 1), BooleanFunction::projection(2, 1)}) ==
          BooleanFunction::projection(2, 1));
    CHECK_THROWS_AS(compose(AND, {BooleanFunction::projection(2, 1)}), ArityMismatch);
    CHECK_THROWS_AS(compose(AND, {BooleanFunction::projection(2, 1), BooleanFunction::projection(3, 1)}),
                    ArityMismatch);
}

TEST_CASE("compose is associative on random small functions") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const unsigned a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
        const BooleanFunction f = randomFunction(rng, a);
        std::vector<BooleanFunction> gs, hs;
        for (unsigned i = 0; i < a; ++i) gs.push_back(randomFunction(rng, b));
        for (unsigned i = 0; i < b; ++i) hs.push_back(randomFunction(rng, c));
        std::vector<BooleanFunction> ghs;
        for (const auto& g : gs) ghs.push_back(compose(g, hs));
        CHECK(compose(compose(f, gs), hs) == compose(f, ghs));
    }
}

TEST_CASE("negation, inner negation and dual") {
    CHECK(dual(AND) == OR);
    CHECK(innerNegate(BooleanFunction::projection(1, 1)) == BooleanFunction::negatedProjection(1, 1));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const BooleanFunction f = randomFunction(rng, 1 + rng() % 8);
        CHECK(dual(dual(f)) == f);
        CHECK(negate(negate(f)) == f);
        CHECK(innerNegate(innerNegate(f)) == f);
        CHECK(dual(f) == negate(innerNegate(f)));
    }
}

TEST_CASE("tuples") {
    CHECK(weight(BitTuple::fromBits({0, 0, 0, 1, 0})) == 1);
    for (unsigned i = 1; i <= 5; ++i)
        for (unsigned j = 1; j <= 5; ++j)
            if (i != j) CHECK(distance(charTuple(5, {i}), charTuple(5, {j}).complement()) == 3);
    const BitTuple t = BitTuple::fromBits({1, 0, 1});
    CHECK(distance(t, t) == 0);
    CHECK(charTuple(5, {4}) == BitTuple::fromBits({0, 0, 0, 1, 0}));
    CHECK(charTuple(3, {}) == zeroTuple(3));
    CHECK(charTuple(3, {1, 2, 3}) == oneTuple(3));
    CHECK(leq(meet(t, BitTuple::fromBits({0, 1, 1})), join(t, BitTuple::fromBits({0, 1, 1}))));
    CHECK_THROWS_AS(distance(t, zeroTuple(2)), ArityMismatch);
    CHECK_THROWS(charTuple(3, {4}));
}

TEST_CASE("minorant") {
    std::mt19937_64 rng(3);
    const BooleanFunction f = randomFunction(rng, 4);
    CHECK(isMinorant(f, f));
    CHECK(isMinorant(AND, OR));
    CHECK_FALSE(isMinorant(OR, AND));
    CHECK_THROWS_AS(isMinorant(AND, BooleanFunction::conjunction(3)), ArityMismatch);
}

TEST_CASE("alternation number") {
    for (unsigned n = 1; n <= 4; ++n) CHECK(altNumber(BooleanFunction::constant(n, false)) == 0);
    CHECK(altNumber(pippengerF(4)) == 4);
    CHECK(altNumber(BooleanFunction::parity(2)) == 2);
    CHECK(altNumber(AND) == 1);
}

TEST_CASE("parse and format") {
    CHECK(parse("2:0001") == AND);
    CHECK(parse("1:01") == BooleanFunction::projection(1, 1));
    CHECK(format(parse("2:0111")) == "2:0111");
    CHECK(parse("2:0111") == OR);
    CHECK_THROWS_AS(parse("2:011"), ParseError);
    CHECK_THROWS_AS(parse("2:01x1"), ParseError);
    CHECK_THROWS_AS(parse("nonsense"), ParseError);
    std::mt19937_64 rng(5);
    for (unsigned n = 1; n <= 9; ++n) {
        const BooleanFunction f = randomFunction(rng, n);
        CHECK(parse(format(f)) == f);
    }
}

TEST_CASE("arity cap") {
    const unsigned saved = arityCap();
    setArityCap(4);
    CHECK_THROWS_AS(checkArity(5, "test"), DomainError);
    setArityCap(saved);
    CHECK_NOTHROW(checkArity(5, "test"));
}
