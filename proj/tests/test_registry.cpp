#include <doctest.h>

#include "clonoid/errors.hpp"
#include "clonoid/families.hpp"
#include "clonoid/registry.hpp"

using namespace clonoid;

namespace {

const Registry& reg() { return Registry::standard(); }

} // namespace

TEST_CASE("membership predicates") {
    CHECK(contains(reg().get("M"), BooleanFunction::disjunction(2)));
    CHECK_FALSE(contains(reg().get("Uinf"), pippengerF(5)));
    CHECK(contains(reg().get("L0"), BooleanFunction::parity(2)));
    CHECK_FALSE(contains(reg().get("U2"), pippengerQ(4)));
}

TEST_CASE("arity parts") {
    const FunctionSet ic = arityPart(reg().get("Ic"), 3);
    CHECK(ic == FunctionSet{BooleanFunction::projection(3, 1), BooleanFunction::projection(3, 2),
                            BooleanFunction::projection(3, 3)});
    CHECK(arityPart(reg().get("L"), 3).size() == 16);
    CHECK(arityPart(reg().get("M"), 3).size() == 20);
    CHECK(arityPart(reg().get("S"), 3).size() == 16);
    CHECK(arityPart(reg().get("All"), 3).size() == 256);
}

TEST_CASE("dual clones") {
    CHECK(reg().dualClone(reg().get("Lambda")).id == "V");
    CHECK(reg().dualClone(reg().get("M")).id == "M");
    CHECK(reg().dualClone(reg().get("U2")).id == "W2");
    for (const auto& c : reg().clones()) {
        const auto& d = reg().dualClone(c);
        for (unsigned m = 1; m <= 3; ++m)
            for (const auto& f : allFunctions(m)) REQUIRE(contains(c, f) == contains(d, dual(f)));
    }
}

TEST_CASE("inclusions agree with arity parts") {
    for (const auto& a : reg().clones())
        for (const auto& b : reg().clones())
            if (reg().isSubclone(a.id, b.id)) CHECK(arityPart(a, 3).isSubsetOf(arityPart(b, 3)));
}

TEST_CASE("unknown clone names point at the clone list") {
    try {
        (void)reg().get("Nope");
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("--list-clones") != std::string::npos);
    }
}

TEST_CASE("classify") {
    CHECK(classify(BooleanFunction::projection(1, 1)).minimalClone == "Ic");
    CHECK(classify(BooleanFunction::parity(2)).minimalClone == "L0");
    CHECK(classify(BooleanFunction::negatedProjection(1, 1)).minimalClone == "Istar");
    CHECK(classify(BooleanFunction::conjunction(2)).minimalClone == "Lambdac");
    const auto r = classify(pippengerF(5));
    CHECK_FALSE((r.t0 && r.t1));
    CHECK_FALSE(r.monotone);
}

TEST_CASE("classify picks a clone containing the function, minimal among those that do") {
    for (unsigned m = 1; m <= 2; ++m)
        for (const auto& f : allFunctions(m)) {
            const auto r = classify(f);
            const auto& c = reg().get(r.minimalClone);
            REQUIRE(contains(c, f));
            for (const auto& d : reg().clones())
                if (d.id != c.id && reg().isSubclone(d.id, c.id)) CHECK_FALSE(contains(d, f));
        }
}

TEST_CASE("registry self-test") {
    CHECK(registrySelfTest(2).passed());
    CHECK(registrySelfTest(3).passed());
}

TEST_CASE("a corrupted generator list is caught") {
    std::vector<CloneDescriptor> clones = reg().clones();
    for (auto& c : clones)
        if (c.id == "L") c.generators.push_back(BooleanFunction::conjunction(2));
    const Registry broken(clones, reg().covers());
    const CheckReport rep = registrySelfTest(3, broken);
    CHECK((rep.status == CheckStatus::Fail));
    CHECK(rep.counterexample.dump().find("\"L\"") != std::string::npos);
}
