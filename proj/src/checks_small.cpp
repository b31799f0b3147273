#include "checks.hpp"

#include "clonoid/engine.hpp"
#include "clonoid/families.hpp"
#include "clonoid/hypergraph.hpp"
#include "clonoid/kernels.hpp"

#include <algorithm>
#include <bit>

namespace clonoid::checks {

namespace {

using nlohmann::json;

std::vector<unsigned> paramList(const SuiteConfig& cfg, const char* key, std::vector<unsigned> dflt) {
    if (!cfg.params.contains(key)) return dflt;
    const auto& v = cfg.params[key];
    if (v.is_array()) return v.get<std::vector<unsigned>>();
    return {v.get<unsigned>()};
}

void bounded(CheckReport& rep, const std::string& scope) { rep.notes.push_back("bounded verification: " + scope); }

std::string pairKey(unsigned m, unsigned n) { return "m" + std::to_string(m) + ".n" + std::to_string(n); }

std::vector<std::uint64_t> poolWords(const std::string& cloneId, unsigned n) {
    std::vector<std::uint64_t> words;
    for (const auto& h : arityPart(Registry::standard().get(cloneId), n)) words.push_back(h.word0());
    return words;
}

json innerJson(const BooleanFunction& outer, const std::vector<std::uint64_t>& pool, unsigned n, std::uint64_t phi) {
    json arr = json::array();
    if (auto t = findInnerTuple(outer, pool, n, phi))
        for (auto i : *t) arr.push_back(format(BooleanFunction::fromWord(n, pool[i])));
    return arr;
}

json formats(const FunctionSet& F) {
    json arr = json::array();
    for (const auto& f : F) arr.push_back(format(f));
    return arr;
}

void addCount(CheckReport& rep, const std::string& key, std::uint64_t n) {
    rep.count(key, static_cast<std::int64_t>(std::min<std::uint64_t>(n, INT64_MAX)));
}

// Scans every composite φ of `outer` over the n-ary part of a clone and reports the
// first φ meeting `hyp` but not `concl`. Returns false on a violation.
template <class Hyp, class Concl>
bool scanLemma(CheckReport& rep, const BooleanFunction& outer, unsigned m, unsigned n, const std::string& cloneId,
               const std::string& part, Hyp hyp, Concl concl) {
    const auto pool = poolWords(cloneId, n);
    const auto scan = scanCompositesParallel(outer, pool, n);
    addCount(rep, "evaluations", scan.evaluations);
    addCount(rep, "assignmentsCovered", scan.assignmentsCovered);
    addCount(rep, "composites", scan.composites.size());
    for (std::uint64_t phi : scan.composites) {
        if (!hyp(phi)) continue;
        rep.count(pairKey(m, n) + "." + part + ".hypothesisHits");
        if (concl(phi)) continue;
        rep.fail({{"m", m},
                  {"n", n},
                  {"part", part},
                  {"innerClone", cloneId},
                  {"outer", format(outer)},
                  {"phi", format(BooleanFunction::fromWord(n, phi))},
                  {"inner", innerJson(outer, pool, n, phi)}});
        return false;
    }
    return true;
}

} // namespace

CheckReport fnOmega1Lemma(const SuiteConfig& cfg) {
    CheckReport rep;
    const auto ms = paramList(cfg, "m", {5, 6}), ns = paramList(cfg, "n", {5, 6});
    bounded(rep, "(m, n) in {5,6}^2, all composites over Omega1, I0 and I1 of arity n");
    for (unsigned m : ms)
        for (unsigned n : ns) {
            const BooleanFunction fm = pippengerF(m);
            const std::uint64_t fn = pippengerF(n).word0(), mask = tailMask(n);
            auto above = [&](std::uint64_t phi) { return (fn & ~phi & mask) == 0; };
            auto below = [&](std::uint64_t phi) { return (~phi & ~fn & mask) == 0; };
            if (!scanLemma(rep, fm, m, n, "Omega1", "i", [&](std::uint64_t p) { return above(p) || below(p); },
                           [&](std::uint64_t p) { return p == mask || m == n; }))
                return rep;
            for (const char* c : {"I0", "I1"})
                if (!scanLemma(rep, fm, m, n, c, std::string("ii.") + c, above, [&](std::uint64_t) { return m == n; }))
                    return rep;
            rep.count("pairs");
        }
    return rep;
}

CheckReport qnIstarLemma(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "(m, n) in {3,4,5}^2, all composites over Istar of arity n");
    for (unsigned m : paramList(cfg, "m", {3, 4, 5}))
        for (unsigned n : paramList(cfg, "n", {3, 4, 5})) {
            const std::uint64_t qn = pippengerQ(n).word0(), mask = tailMask(n);
            if (!scanLemma(rep, pippengerQ(m), m, n, "Istar", "up",
                           [&](std::uint64_t p) { return (qn & ~p & mask) == 0; },
                           [&](std::uint64_t) { return m == n; }))
                return rep;
            rep.count("pairs");
        }
    return rep;
}

CheckReport lemmaFnV(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "(m, n) in {4,5}^2, all composites over V of arity n");
    for (unsigned m : paramList(cfg, "m", {4, 5}))
        for (unsigned n : paramList(cfg, "n", {4, 5})) {
            const std::uint64_t fn = pippengerF(n).word0(), mask = tailMask(n);
            const std::uint64_t top = std::uint64_t{1} << ((1u << n) - 1);
            if (!scanLemma(rep, pippengerF(m), m, n, "V", "up",
                           [&](std::uint64_t p) { return (p & top) == 0 && (fn & ~p & mask) == 0; },
                           [&](std::uint64_t) { return m == n; }))
                return rep;
            rep.count("pairs");
        }
    return rep;
}

namespace {

std::vector<std::vector<unsigned>> subsetsOf(const std::vector<unsigned>& universe) {
    std::vector<std::vector<unsigned>> out;
    for (std::uint32_t mask = 0; mask < (1u << universe.size()); ++mask) {
        std::vector<unsigned> s;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (mask & (1u << i)) s.push_back(universe[i]);
        out.push_back(s);
    }
    return out;
}

struct MembershipCase {
    std::string c1, c2;
    bool negateTarget = false;
};

// target(n) ∈ <F_S>(C1, C2) iff n ∈ S, for every S ⊆ universe and n ∈ universe.
void membershipProp(CheckReport& rep, const SuiteConfig& cfg, FamilyKind kind, const std::vector<unsigned>& universe,
                    const std::vector<MembershipCase>& cases) {
    const Registry& reg = Registry::standard();
    for (const auto& cs : cases) {
        const auto& C1 = reg.get(cs.c1);
        const auto& C2 = reg.get(cs.c2);
        for (const auto& S : subsetsOf(universe)) {
            FunctionSet F;
            for (unsigned k : S) F = F.unite(FunctionSet{family(kind, k)});
            for (unsigned n : universe) {
                BooleanFunction target = family(kind, n);
                if (cs.negateTarget) target = negate(target);
                const bool expected = std::find(S.begin(), S.end(), n) != S.end();
                const Verdict v = F.empty() ? Verdict::False : isClonoidMember(target, F, C1, C2, cfg.budget);
                rep.count("queries");
                rep.count(v == Verdict::True ? "verdictTrue" : v == Verdict::False ? "verdictFalse" : "verdictIndeterminate");
                if (v == Verdict::Indeterminate) {
                    if (rep.status == CheckStatus::Pass) rep.status = CheckStatus::Indeterminate;
                    continue;
                }
                if ((v == Verdict::True) != expected) {
                    rep.fail({{"C1", cs.c1},
                              {"C2", cs.c2},
                              {"S", S},
                              {"n", n},
                              {"target", format(target)},
                              {"generators", formats(F)},
                              {"expected", expected},
                              {"verdict", toString(v)}});
                    return;
                }
            }
        }
    }
}

} // namespace

CheckReport propOmega1Omega1(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "S subsets of {5,6}, n in {5,6}");
    membershipProp(rep, cfg, FamilyKind::PippengerF, {5, 6}, {{"Omega1", "Omega1"}});
    return rep;
}

CheckReport propOmega1Lambda(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "S subsets of {5,6}, n in {5,6}");
    membershipProp(rep, cfg, FamilyKind::PippengerF, {5, 6}, {{"Omega1", "Lambda"}});
    return rep;
}

CheckReport propI0I1Uinf(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "S subsets of {5,6}, n in {5,6}");
    membershipProp(rep, cfg, FamilyKind::PippengerF, {5, 6}, {{"I0", "Uinf"}, {"I1", "Uinf"}});
    return rep;
}

CheckReport propIstarUinf(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "S subsets of {3,4,5}, n in {3,4,5}");
    membershipProp(rep, cfg, FamilyKind::PippengerQ, {3, 4, 5}, {{"Istar", "Uinf"}});
    return rep;
}

namespace {

// Measured search nodes for both targets of a pair, times the 2^n points each node may check.
std::uint64_t fmlPairCost(unsigned m, unsigned n) {
    const std::uint64_t nodes = m <= 6 ? (n <= 6 ? 8'000 : 11'000) : (n <= 6 ? 225'000 : 200'000);
    return nodes << n;
}

BooleanFunction randomFunction(std::mt19937_64& rng, unsigned arity) {
    return BooleanFunction::fromWord(arity, rng() & tailMask(arity));
}

// The affine search against the full composite set {outer} L^(n) for small arities.
bool crossValidateAffine(CheckReport& rep, std::mt19937_64& rng) {
    std::vector<BooleanFunction> outers{pippengerF(3), pippengerF(4), pippengerQ(3), pippengerQ(4)};
    for (int i = 0; i < 8; ++i) outers.push_back(randomFunction(rng, 3));
    for (const auto& outer : outers)
        for (unsigned n : {3u, 4u}) {
            const auto pool = poolWords("L", n);
            const auto scan = scanCompositesParallel(outer, pool, n);
            std::vector<std::uint64_t> targets;
            if (n == 3) {
                for (std::uint64_t t = 0; t < 256; ++t) targets.push_back(t);
            } else {
                targets = scan.composites;
                for (int i = 0; i < 300; ++i) targets.push_back(rng() & tailMask(4));
            }
            for (std::uint64_t t : targets) {
                const BooleanFunction target = BooleanFunction::fromWord(n, t);
                const bool brute = std::binary_search(scan.composites.begin(), scan.composites.end(), t);
                const auto found = findAffineInner(outer, target);
                rep.count("crossValidationTargets");
                bool valid = found.has_value() == brute;
                if (valid && found) {
                    valid = compose(outer, *found) == target &&
                            std::all_of(found->begin(), found->end(), [](const BooleanFunction& g) { return isAffine(g); });
                }
                if (!valid) {
                    rep.fail({{"kind", "affine-search-disagrees"},
                              {"outer", format(outer)},
                              {"target", format(target)},
                              {"bruteForce", brute},
                              {"search", found.has_value()}});
                    return false;
                }
            }
        }
    return true;
}

} // namespace

std::uint64_t lemmaFmlFullCost() {
    std::uint64_t c = 0;
    for (unsigned m : {6u, 8u})
        for (unsigned n : {6u, 8u}) c += fmlPairCost(m, n);
    return c;
}

CheckReport lemmaFml(const SuiteConfig& cfg) {
    CheckReport rep;
    auto rng = rngFor(cfg, "lemma-fml");
    rep.count("seed", static_cast<std::int64_t>(cfg.seed));
    if (!crossValidateAffine(rep, rng)) return rep;

    std::uint64_t remaining = cfg.budget;
    std::vector<std::string> exhausted, sampled;
    for (unsigned m : paramList(cfg, "m", {6, 8}))
        for (unsigned n : paramList(cfg, "n", {6, 8})) {
            const BooleanFunction fm = pippengerF(m), fn = pippengerF(n);
            const std::string key = std::to_string(m) + "x" + std::to_string(n);
            const std::uint64_t cost = fmlPairCost(m, n);
            if (cost <= remaining || (m == 6 && n == 6)) {
                remaining -= std::min(cost, remaining);
                for (const auto& target : {fn, negate(fn)}) {
                    std::uint64_t nodes = 0;
                    const auto found = findAffineInner(fm, target, &nodes);
                    addCount(rep, "searchNodes", nodes);
                    if (!found) continue;
                    rep.count(pairKey(m, n) + ".witnesses");
                    if (m != n) {
                        json inner = json::array();
                        for (const auto& g : *found) inner.push_back(format(g));
                        rep.fail({{"m", m}, {"n", n}, {"outer", format(fm)}, {"target", format(target)}, {"inner", inner}});
                        return rep;
                    }
                }
                exhausted.push_back(key);
                continue;
            }
            // Random affine inner tuples; evidence only, never a verdict for the pair.
            const std::uint64_t samples = std::clamp<std::uint64_t>(remaining / ((1ull << n) * m), 1, 20'000);
            for (std::uint64_t s = 0; s < samples; ++s) {
                std::vector<BooleanFunction> inner;
                for (unsigned i = 0; i < m; ++i) {
                    const std::uint64_t coeff = rng() & ((1ull << (n + 1)) - 1);
                    inner.push_back(BooleanFunction::fromPredicate(n, [&](std::uint64_t x) {
                        return ((std::popcount(x & (coeff >> 1)) + (coeff & 1u)) & 1u) != 0;
                    }));
                }
                const BooleanFunction phi = compose(fm, inner);
                if (m != n && (phi == fn || phi == negate(fn))) {
                    json arr = json::array();
                    for (const auto& g : inner) arr.push_back(format(g));
                    rep.fail({{"m", m}, {"n", n}, {"outer", format(fm)}, {"target", format(phi)}, {"inner", arr}});
                    return rep;
                }
            }
            addCount(rep, "sampledTuples", samples);
            sampled.push_back(key);
        }
    rep.count("pairsExhausted", static_cast<std::int64_t>(exhausted.size()));
    rep.count("pairsSampled", static_cast<std::int64_t>(sampled.size()));
    std::string ex, sa;
    for (const auto& k : exhausted) ex += (ex.empty() ? "" : ", ") + k;
    for (const auto& k : sampled) sa += (sa.empty() ? "" : ", ") + k;
    bounded(rep, "even m, n in {6,8}; exhausted: " + (ex.empty() ? std::string("none") : ex) +
                     "; sampled: " + (sa.empty() ? std::string("none") : sa));
    return rep;
}

CheckReport propFiVj(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "n, m in {4,5}; alternation numbers for n in {4,5,6}; 500 sampled pairs of arity <= 3");
    for (unsigned n : {4u, 5u, 6u})
        for (const auto& f : {pippengerF(n), negate(pippengerF(n))}) {
            const unsigned alt = altNumber(f);
            rep.count("altComputed");
            if (alt != 4) {
                rep.fail({{"kind", "alternation-number"}, {"function", format(f)}, {"alt", alt}, {"expected", 4}});
                return rep;
            }
        }

    for (unsigned m : {4u, 5u})
        for (unsigned n : {4u, 5u}) {
            const std::uint64_t neg = negate(pippengerF(n)).word0();
            if (!scanLemma(rep, pippengerF(m), m, n, "V", "negation",
                           [&](std::uint64_t p) { return p == neg; }, [](std::uint64_t) { return false; }))
                return rep;
        }

    membershipProp(rep, cfg, FamilyKind::PippengerF, {4, 5}, {{"V", "Istar", true}, {"V", "Omega1"}, {"V", "Lambda"}});
    if (rep.status == CheckStatus::Fail) return rep;

    auto rng = rngFor(cfg, "prop-fi-vj");
    rep.count("seed", static_cast<std::int64_t>(cfg.seed));
    std::uniform_int_distribution<unsigned> arity(1, 3);
    for (int i = 0; i < 500; ++i) {
        const BooleanFunction f = randomFunction(rng, arity(rng));
        const BooleanFunction g = randomFunction(rng, arity(rng));
        const bool crit = altCriterionMinor(f, g), brute = monotoneMinorBrute(f, g);
        rep.count("sampledPairs");
        rep.count(brute ? "minorPairs" : "nonMinorPairs");
        if (crit != brute) {
            rep.fail({{"kind", "alternation-criterion"},
                      {"f", format(f)},
                      {"g", format(g)},
                      {"altF", altNumber(f)},
                      {"altG", altNumber(g)},
                      {"criterion", crit},
                      {"bruteForce", brute}});
            return rep;
        }
    }
    return rep;
}

CheckReport thetaLemma(const SuiteConfig& cfg) {
    CheckReport rep;
    const unsigned n = paramList(cfg, "n", {5}).front();
    bounded(rep, "n = " + std::to_string(n) + ", every 3-subset S of 1..n+2");
    for (FamilyKind kind : {FamilyKind::PippengerF, FamilyKind::PippengerQ}) {
        const std::string name = toString(kind) + std::to_string(n);
        const BooleanFunction fixture = n == 5 ? cfg.fixture(name) : family(kind, n);
        const BooleanFunction reference = family(kind, n);
        for (std::uint64_t a = 0; a < fixture.tableSize(); ++a) {
            rep.count("fixturePoints");
            if (fixture[a] != reference[a]) {
                rep.fail({{"kind", "fixture-weight-class"},
                          {"family", toString(kind)},
                          {"fixture", name},
                          {"function", format(fixture)},
                          {"point", a},
                          {"tuple", BitTuple(n, a).toString()},
                          {"weight", std::popcount(a)},
                          {"expected", static_cast<bool>(reference[a])},
                          {"actual", static_cast<bool>(fixture[a])}});
                return rep;
            }
        }
        const BooleanFunction theta = buildTheta(fixture);
        const BooleanFunction expected = family(kind, n + 2);
        for (std::uint64_t a = 0; a < theta.tableSize(); ++a)
            if (theta[a] != expected[a]) {
                rep.fail({{"kind", "theta"},
                          {"family", toString(kind)},
                          {"n", n},
                          {"function", format(fixture)},
                          {"point", a},
                          {"tuple", BitTuple(n + 2, a).toString()},
                          {"theta", static_cast<bool>(theta[a])},
                          {"expected", static_cast<bool>(expected[a])}});
                return rep;
            }
        rep.count("thetaEqualities");
    }

    // The g^S maps: constants fixed, weight 1 and n+1 kept, and every middle weight
    // sent outside {1, n-1, n} by some S.
    const unsigned N = n + 2;
    const auto subsets = subsetsOfSize(N, 3);
    std::vector<std::vector<BooleanFunction>> maps;
    for (const auto& S : subsets) maps.push_back(buildGS(n, S));
    auto imageWeight = [&](std::size_t s, std::uint64_t a) {
        unsigned w = 0;
        for (const auto& g : maps[s]) w += g[a];
        return w;
    };
    auto itemFail = [&](const char* item, std::size_t s, std::uint64_t a, unsigned w) {
        json S = json::array();
        for (unsigned i : subsets[s]) S.push_back(i);
        rep.fail({{"kind", "gS"}, {"item", item}, {"n", n}, {"S", S}, {"point", a}, {"tuple", BitTuple(N, a).toString()},
                  {"imageWeight", w}});
    };
    const std::uint64_t ones = (std::uint64_t{1} << N) - 1;
    for (std::size_t s = 0; s < maps.size(); ++s) {
        if (unsigned w = imageWeight(s, 0); w != 0) return itemFail("i", s, 0, w), rep;
        if (unsigned w = imageWeight(s, ones); w != n) return itemFail("ii", s, ones, w), rep;
        for (std::uint64_t a = 0; a <= ones; ++a) {
            const unsigned wa = std::popcount(a), w = imageWeight(s, a);
            if (wa == 1 && w != 1) return itemFail("iii", s, a, w), rep;
            if (wa == N - 1 && w != n - 1) return itemFail("iv", s, a, w), rep;
        }
        rep.count("gSMaps");
    }
    for (std::uint64_t a = 0; a <= ones; ++a) {
        const unsigned wa = std::popcount(a);
        if (wa < 2 || wa > n) continue;
        bool escapes = false;
        for (std::size_t s = 0; s < maps.size() && !escapes; ++s) {
            const unsigned w = imageWeight(s, a);
            escapes = w != 1 && w != n - 1 && w != n;
        }
        rep.count("middlePoints");
        if (!escapes) {
            rep.fail({{"kind", "gS"}, {"item", "v"}, {"n", n}, {"point", a}, {"tuple", BitTuple(N, a).toString()}});
            return rep;
        }
    }
    return rep;
}

CheckReport propUkHom(const SuiteConfig&) {
    CheckReport rep;
    bounded(rep, "all 0-preserving pairs of arity <= 3, k in {2, inf}");
    std::vector<std::vector<BooleanFunction>> zeroPres(4);
    for (unsigned m = 1; m <= 3; ++m)
        for (auto& f : allFunctions(m))
            if (!f[0]) zeroPres[m].push_back(std::move(f));
    for (unsigned k : {2u, kRankInfinity}) {
        const std::string ks = rankName(k);
        std::vector<std::vector<std::uint64_t>> pool(4);
        std::vector<std::vector<Hypergraph>> graphs(4);
        for (unsigned m = 1; m <= 3; ++m) {
            for (const auto& h : separatingPart(k, m)) pool[m].push_back(h.word0());
            for (const auto& f : zeroPres[m]) graphs[m].push_back(disjointnessHypergraph(f, k));
        }
        for (unsigned ga = 1; ga <= 3; ++ga)
            for (std::size_t gi = 0; gi < zeroPres[ga].size(); ++gi) {
                const auto& g = zeroPres[ga][gi];
                for (unsigned m = 1; m <= 3; ++m) {
                    const auto scan = scanCompositesSerial(g, pool[m], m);
                    addCount(rep, "evaluations", scan.evaluations);
                    for (std::size_t fi = 0; fi < zeroPres[m].size(); ++fi) {
                        const auto& f = zeroPres[m][fi];
                        const bool brute = std::binary_search(scan.composites.begin(), scan.composites.end(), f.word0());
                        const bool hom = existsHomomorphism(graphs[m][fi], graphs[ga][gi]);
                        rep.count("pairs.k" + ks);
                        if (brute) rep.count("minors.k" + ks);
                        if (brute != hom) {
                            rep.fail({{"f", format(f)}, {"g", format(g)}, {"k", ks}, {"bruteForce", brute}, {"homomorphism", hom}});
                            return rep;
                        }
                    }
                }
            }
    }
    return rep;
}

CheckReport propUk(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "50 sampled sets K of 1 to 3 functions in OX of arity <= 3, output arity <= 3");
    auto rng = rngFor(cfg, "prop-uk");
    rep.count("seed", static_cast<std::int64_t>(cfg.seed));
    std::uniform_int_distribution<unsigned> arity(1, 3), size(1, 3);
    for (int i = 0; i < 50; ++i) {
        std::vector<BooleanFunction> members;
        const unsigned s = size(rng);
        for (unsigned j = 0; j < s; ++j) {
            const unsigned a = arity(rng);
            members.push_back(BooleanFunction::fromWord(a, rng() & tailMask(a) & ~std::uint64_t{1}));
        }
        const FunctionSet K(members);
        const unsigned m = arity(rng);
        const CheckReport sub = u2UinfGenerationEquality(K, m, cfg.budget);
        rep.count("samples");
        for (const auto& [key, v] : sub.statistics)
            if (key != "arity") rep.count(key, v);
        if (sub.status == CheckStatus::Fail) {
            json cex = sub.counterexample;
            cex["generators"] = formats(K);
            cex["arity"] = m;
            rep.fail(cex);
            return rep;
        }
    }
    return rep;
}

} // namespace clonoid::checks
