// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "clonoid/errors.hpp"
#include "clonoid/families.hpp"
#include "clonoid/registry.hpp"
#include "clonoid/suite.hpp"

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace clonoid;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

Outcome checkPasses(const std::string& id, const SuiteConfig& cfg = {}) {
    const CheckReport r = runCheck(id, cfg);
    Outcome o{r.passed(), id + " " + toString(r.status)};
    if (!r.counterexample.is_null()) o.detail += " " + r.counterexample.dump();
    return o;
}

Outcome allPass(const std::vector<std::string>& ids) {
    Outcome o{true, ""};
    for (const auto& id : ids) {
        const Outcome one = checkPasses(id);
        o.ok = o.ok && one.ok;
        o.detail += (o.detail.empty() ? "" : "; ") + one.detail;
    }
    return o;
}

std::int64_t stat(const CheckReport& r, const std::string& key) {
    const auto it = r.statistics.find(key);
    return it == r.statistics.end() ? 0 : it->second;
}

Outcome registryCounts() {
    const Registry& reg = Registry::standard();
    const std::size_t m = arityPart(reg.get("M"), 3).size(), l = arityPart(reg.get("L"), 3).size(),
                      s = arityPart(reg.get("S"), 3).size(), ic = arityPart(reg.get("Ic"), 3).size();
    return {m == 20 && l == 16 && s == 16 && ic == 3,
            "M=" + std::to_string(m) + " L=" + std::to_string(l) + " S=" + std::to_string(s) +
                " Ic=" + std::to_string(ic)};
}

Outcome selfTest() {
    const CheckReport r = registrySelfTest(3);
    return {r.passed(), toString(r.status)};
}

Outcome withCount(const std::string& id, const std::string& key, std::int64_t atLeast) {
    const CheckReport r = runCheck(id);
    const std::int64_t n = stat(r, key);
    return {r.passed() && n >= atLeast, id + " " + toString(r.status) + " " + key + "=" + std::to_string(n)};
}

Outcome ukHom() {
    const CheckReport r = runCheck("prop-uk-hom");
    std::int64_t pairs = 0;
    for (const auto& [k, v] : r.statistics)
        if (k.rfind("pairs.", 0) == 0) pairs += v;
    return {r.passed() && pairs > 0, "prop-uk-hom " + toString(r.status) + " pairs=" + std::to_string(pairs)};
}

Outcome dualityAndDm() {
    const CheckReport a = runCheck("duality-knid"), b = runCheck("dm-lemmas");
    const std::int64_t na = stat(a, "instances"), nb = stat(b, "instances");
    return {a.passed() && b.passed() && na >= 100 && nb >= 100,
            "duality-knid " + toString(a.status) + " instances=" + std::to_string(na) + "; dm-lemmas " +
                toString(b.status) + " instances=" + std::to_string(nb)};
}

Outcome alternation() {
    bool ok = true;
    std::string detail;
    for (unsigned n = 4; n <= 6; ++n) {
        const unsigned a = altNumber(pippengerF(n)), b = altNumber(negate(pippengerF(n)));
        ok = ok && a == 4 && b == 4;
        detail += "n=" + std::to_string(n) + ":" + std::to_string(a) + "/" + std::to_string(b) + " ";
    }
    const CheckReport r = runCheck("prop-fi-vj");
    const std::int64_t sampled = stat(r, "sampledPairs");
    ok = ok && r.passed() && sampled >= 500;
    return {ok, detail + "prop-fi-vj " + toString(r.status) + " sampledPairs=" + std::to_string(sampled)};
}

Outcome mutationKill() {
    const BooleanFunction f5 = pippengerF(5);
    std::size_t killed = 0, replayed = 0;
    for (std::uint64_t i = 0; i < f5.tableSize(); ++i) {
        BooleanFunction mutant = f5;
        mutant.set(i, !mutant[i]);
        SuiteConfig cfg;
        cfg.fixtures["f5"] = mutant;
        const CheckReport r = runCheck("theta-lemma", cfg);
        if (r.status != CheckStatus::Fail) continue;
        ++killed;
        const auto& cex = r.counterexample;
        if (cex.contains("function") && cex.contains("point")) {
            const BooleanFunction g = parse(cex.at("function").get<std::string>());
            const auto p = cex.at("point").get<std::uint64_t>();
            if (g == mutant && g[p] != f5[p]) ++replayed;
        }
    }
    return {killed == f5.tableSize() && replayed == f5.tableSize(),
            "killed=" + std::to_string(killed) + "/32 replayed=" + std::to_string(replayed) + "/32"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"registry self-test at arities 1..3", selfTest},
        {"arity-3 part sizes of M, L, S, Ic", registryCounts},
        {"theta-lemma", [] { return checkPasses("theta-lemma"); }},
        {"fn-omega1-lemma", [] { return checkPasses("fn-omega1-lemma"); }},
        {"membership of family members in generated clonoids",
         [] { return allPass({"prop-omega1-omega1", "prop-omega1-lambda", "prop-i0i1-uinf", "prop-istar-uinf"}); }},
        {"prop-imcuinf", [] { return checkPasses("prop-imcuinf"); }},
        {"prop-vomcuinf", [] { return checkPasses("prop-vomcuinf"); }},
        {"table-stability", [] { return checkPasses("table-stability"); }},
        {"prop-uk-hom", ukHom},
        {"prop-uk with at least 50 samples", [] { return withCount("prop-uk", "samples", 50); }},
        {"duality-knid and dm-lemmas", dualityAndDm},
        {"alternation numbers and sampled minor pairs", alternation},
        {"every single-bit mutation of f5 fails theta-lemma", mutationKill},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failures;
        std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
