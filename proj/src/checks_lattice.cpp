#include "checks.hpp"

#include "clonoid/engine.hpp"
#include "clonoid/families.hpp"

#include <algorithm>
#include <optional>

namespace clonoid::checks {

namespace {

using nlohmann::json;
using Pred = std::function<bool(const BooleanFunction&)>;

struct NamedSet {
    std::string name;
    Pred pred;
};

bool antitone(const BooleanFunction& f) { return isMonotone(negate(f)); }

json formats(const FunctionSet& F) {
    json arr = json::array();
    for (const auto& f : F) arr.push_back(format(f));
    return arr;
}

json formats(const std::vector<BooleanFunction>& F) { return formats(FunctionSet(F)); }

void bounded(CheckReport& rep, const std::string& scope) { rep.notes.push_back("bounded verification: " + scope); }

const Pred kEmpty = [](const BooleanFunction&) { return false; };
const Pred kAll = [](const BooleanFunction&) { return true; };
const Pred kVak = [](const BooleanFunction& f) { return f.isConstant(); };
const Pred kVak0 = [](const BooleanFunction& f) { return f.isConstant(false); };
const Pred kVak1 = [](const BooleanFunction& f) { return f.isConstant(true); };
const Pred kM = [](const BooleanFunction& f) { return isMonotone(f); };
const Pred kMneg = [](const BooleanFunction& f) { return antitone(f); };
const Pred kM0 = [](const BooleanFunction& f) { return isMonotone(f) && !f[0]; };
const Pred kM1 = [](const BooleanFunction& f) { return isMonotone(f) && f[f.tableSize() - 1]; };
const Pred kMneg0 = [](const BooleanFunction& f) { return antitone(f) && f[0]; };
const Pred kMneg1 = [](const BooleanFunction& f) { return antitone(f) && !f[f.tableSize() - 1]; };
const Pred kOX = [](const BooleanFunction& f) { return !f[0]; };
const Pred kIX = [](const BooleanFunction& f) { return f[0]; };
const Pred kXI = [](const BooleanFunction& f) { return f[f.tableSize() - 1]; };
const Pred kXO = [](const BooleanFunction& f) { return !f[f.tableSize() - 1]; };

Pred unite(Pred a, Pred b) {
    return [a, b](const BooleanFunction& f) { return a(f) || b(f); };
}

// Members of every arity 1..3, for inclusion and least-superset queries.
std::vector<BooleanFunction> smallUniverse(unsigned maxArity) {
    std::vector<BooleanFunction> out;
    for (unsigned m = 1; m <= maxArity; ++m)
        for (auto& f : allFunctions(m)) out.push_back(std::move(f));
    return out;
}

struct SetLattice {
    std::vector<NamedSet> sets;
    std::vector<BooleanFunction> universe = smallUniverse(3);
    std::vector<std::vector<char>> in; // in[s][i]: universe[i] ∈ sets[s]

    explicit SetLattice(std::vector<NamedSet> s) : sets(std::move(s)) {
        for (const auto& ns : sets) {
            std::vector<char> row;
            for (const auto& f : universe) row.push_back(ns.pred(f) ? 1 : 0);
            in.push_back(std::move(row));
        }
    }

    bool subset(std::size_t a, std::size_t b) const {
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (in[a][i] && !in[b][i]) return false;
        return true;
    }

    std::optional<std::size_t> leastContaining(const std::vector<BooleanFunction>& S) const {
        std::vector<std::size_t> cands;
        for (std::size_t s = 0; s < sets.size(); ++s)
            if (std::all_of(S.begin(), S.end(), [&](const BooleanFunction& f) { return sets[s].pred(f); }))
                cands.push_back(s);
        for (auto c : cands)
            if (std::all_of(cands.begin(), cands.end(), [&](std::size_t d) { return subset(c, d); })) return c;
        return std::nullopt;
    }

    std::vector<BooleanFunction> members(std::size_t s, unsigned m) const {
        std::vector<BooleanFunction> out;
        for (auto& f : allFunctions(m))
            if (sets[s].pred(f)) out.push_back(std::move(f));
        return out;
    }
};

bool stableAll(CheckReport& rep, const SetLattice& L, const std::string& c1, const std::string& c2) {
    const Registry& reg = Registry::standard();
    for (const auto& ns : L.sets) {
        const auto sub = isStable(FunctionClass::fromPredicate(ns.name, ns.pred), reg.get(c1), reg.get(c2), 3, 3);
        for (const auto& [k, v] : sub.statistics) rep.count("stability." + k, v);
        rep.count("stableSets");
        if (sub.status == CheckStatus::Fail) {
            rep.fail({{"kind", "stability"}, {"set", ns.name}, {"C1", c1}, {"C2", c2}, {"violation", sub.counterexample}});
            return false;
        }
    }
    return true;
}

bool distinctAtTwo(CheckReport& rep, const SetLattice& L) {
    std::vector<std::vector<BooleanFunction>> upToTwo;
    for (std::size_t s = 0; s < L.sets.size(); ++s) {
        auto a = L.members(s, 1);
        for (auto& f : L.members(s, 2)) a.push_back(std::move(f));
        upToTwo.push_back(std::move(a));
    }
    for (std::size_t a = 0; a < upToTwo.size(); ++a)
        for (std::size_t b = a + 1; b < upToTwo.size(); ++b)
            if (upToTwo[a] == upToTwo[b]) {
                rep.fail({{"kind", "distinctness"}, {"first", L.sets[a].name}, {"second", L.sets[b].name}});
                return false;
            }
    rep.count("distinctSets", static_cast<std::int64_t>(L.sets.size()));
    return true;
}

// Generator sets: every function of arity <= 3 alone, and every pair of arity <= 2.
std::vector<std::vector<BooleanFunction>> generatorSets() {
    const auto small = smallUniverse(2);
    std::vector<std::vector<BooleanFunction>> out;
    for (const auto& f : smallUniverse(3)) out.push_back({f});
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) out.push_back({small[i], small[j]});
    return out;
}

// <S> at arities 1..3 equals the least listed set containing S (singletons and pairs of arity <= 2).
bool generationMatches(CheckReport& rep, const SetLattice& L, const std::string& c1, const std::string& c2) {
    const auto small = smallUniverse(2);
    std::vector<std::vector<BooleanFunction>> gens;
    for (const auto& f : small) gens.push_back({f});
    for (std::size_t i = 0; i < small.size(); ++i)
        for (std::size_t j = i + 1; j < small.size(); ++j) gens.push_back({small[i], small[j]});
    for (const auto& S : gens) {
        const auto least = L.leastContaining(S);
        if (!least) {
            rep.fail({{"kind", "no-least-superset"}, {"generators", formats(S)}});
            return false;
        }
        rep.count("generated." + L.sets[*least].name);
        for (unsigned m = 1; m <= 3; ++m) {
            GenerationRequest req;
            req.generators = FunctionSet(S);
            req.sourceClone = c1;
            req.targetClone = c2;
            req.outputArity = m;
            const FunctionSet got = generateClonoid(req);
            const FunctionSet expected(L.members(*least, m));
            rep.count("generationQueries");
            if (!(got == expected)) {
                rep.fail({{"kind", "generation"},
                          {"generators", formats(S)},
                          {"C1", c1},
                          {"C2", c2},
                          {"arity", m},
                          {"expectedSet", L.sets[*least].name},
                          {"expected", formats(expected)},
                          {"generated", formats(got)}});
                return false;
            }
        }
    }
    return true;
}

/*! A claim: for generator sets whose least listed superset is `target`, the recipe
    (built from the generators) lies in S C1, and every nonconstant φ of the target
    equals witness(φ)(recipe) with witness(φ) ∈ C2. */
struct Claim {
    std::string label;
    std::string target;
    std::function<std::optional<std::vector<BooleanFunction>>(const std::vector<BooleanFunction>&, unsigned)> recipe;
    std::function<BooleanFunction(const BooleanFunction&)> witness;
};

bool claimsHold(CheckReport& rep, const SetLattice& L, const std::vector<Claim>& claims, const std::string& c1,
                const std::string& c2) {
    const Registry& reg = Registry::standard();
    const auto& C1 = reg.get(c1);
    const auto& C2 = reg.get(c2);
    std::map<std::string, std::size_t> index;
    for (std::size_t s = 0; s < L.sets.size(); ++s) index[L.sets[s].name] = s;

    for (const auto& S : generatorSets()) {
        const auto least = L.leastContaining(S);
        if (!least) continue;
        for (const auto& cl : claims) {
            if (L.sets[*least].name != cl.target) continue;
            for (unsigned m = 1; m <= 3; ++m) {
                const auto recipe = cl.recipe(S, m);
                if (!recipe) {
                    rep.fail({{"kind", "claim-recipe-unavailable"}, {"claim", cl.label}, {"generators", formats(S)}});
                    return false;
                }
                const FunctionSet composed = rightCompose(FunctionSet(S), C1, m);
                for (const auto& h : *recipe)
                    if (!composed.contains(h)) {
                        rep.fail({{"kind", "claim-recipe"},
                                  {"claim", cl.label},
                                  {"generators", formats(S)},
                                  {"C1", c1},
                                  {"arity", m},
                                  {"missing", format(h)}});
                        return false;
                    }
            }
            rep.count("claim." + cl.label + ".generatorSets");
        }
    }

    for (const auto& cl : claims) {
        const std::size_t t = index.at(cl.target);
        // Any generator set with this least superset supplies the recipe; take the first.
        std::optional<std::vector<BooleanFunction>> sample;
        for (const auto& S : generatorSets()) {
            const auto least = L.leastContaining(S);
            if (least && *least == t) {
                sample = S;
                break;
            }
        }
        if (!sample) continue;
        for (unsigned m = 1; m <= 3; ++m) {
            const auto recipe = *cl.recipe(*sample, m);
            for (const auto& phi : L.members(t, m)) {
                if (phi.isConstant()) continue;
                const BooleanFunction w = cl.witness(phi);
                rep.count("claim." + cl.label + ".reconstructions");
                if (!contains(C2, w) || compose(w, recipe) != phi) {
                    rep.fail({{"kind", "claim-witness"},
                              {"claim", cl.label},
                              {"phi", format(phi)},
                              {"witness", format(w)},
                              {"C2", c2},
                              {"inner", formats(recipe)},
                              {"witnessInC2", contains(C2, w)}});
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<BooleanFunction> prs(unsigned m) {
    std::vector<BooleanFunction> out;
    for (unsigned i = 1; i <= m; ++i) out.push_back(BooleanFunction::projection(m, i));
    return out;
}

std::vector<BooleanFunction> negPrs(unsigned m) {
    std::vector<BooleanFunction> out;
    for (unsigned i = 1; i <= m; ++i) out.push_back(BooleanFunction::negatedProjection(m, i));
    return out;
}

std::vector<BooleanFunction> plus(std::vector<BooleanFunction> a, std::vector<BooleanFunction> b) {
    for (auto& f : b) a.push_back(std::move(f));
    return a;
}

template <class F>
auto fixedRecipe(F f) {
    return [f](const std::vector<BooleanFunction>&, unsigned m) -> std::optional<std::vector<BooleanFunction>> {
        return f(m);
    };
}

// A recipe needing the α (or α') pair of a generator meeting `eligible`.
template <class E, class R>
auto alphaRecipe(E eligible, bool primed, R build) {
    return [=](const std::vector<BooleanFunction>& S, unsigned m) -> std::optional<std::vector<BooleanFunction>> {
        for (const auto& f : S)
            if (eligible(f)) return build(primed ? alphaBetaPrime(f) : alphaBeta(f), m);
        return std::nullopt;
    };
}

} // namespace

CheckReport propIMcUinf(const SuiteConfig&) {
    CheckReport rep;
    bounded(rep, "stability at arity <= 3 with probe arity 3; generation from sets of arity <= 2 at arities 1..3; "
                 "witnesses for arity <= 3");
    const SetLattice L({{"All", kAll},
                        {"M", kM},
                        {"Mneg", kMneg},
                        {"Vak", kVak},
                        {"Vak0", kVak0},
                        {"Vak1", kVak1},
                        {"Empty", kEmpty}});
    if (!stableAll(rep, L, "I", "McUinf")) return rep;
    if (!distinctAtTwo(rep, L)) return rep;
    if (!generationMatches(rep, L, "I", "McUinf")) return rep;
    const std::vector<Claim> claims{
        {"All", "All", fixedRecipe([](unsigned m) { return recipeAll(m); }), witnessAll},
        {"M", "M", fixedRecipe([](unsigned m) { return recipeM(m); }), witnessM},
        {"Mneg", "Mneg", fixedRecipe([](unsigned m) { return recipeMneg(m); }), witnessMneg},
    };
    claimsHold(rep, L, claims, "I", "McUinf");
    return rep;
}

CheckReport propVoMcUinf(const SuiteConfig&) {
    CheckReport rep;
    bounded(rep, "stability at arity <= 3 with probe arity 3; generation from sets of arity <= 2 at arities 1..3; "
                 "witnesses for arity <= 3");
    const SetLattice L({{"Empty", kEmpty},
                        {"Vak0", kVak0},
                        {"Vak1", kVak1},
                        {"Vak", kVak},
                        {"M0", kM0},
                        {"Mneg0", kMneg0},
                        {"M", kM},
                        {"Mneg", kMneg},
                        {"OX", kOX},
                        {"IX", kIX},
                        {"OXC1", unite(kOX, kVak1)},
                        {"IXC0", unite(kIX, kVak0)},
                        {"All", kAll}});
    if (!stableAll(rep, L, "V0", "McUinf")) return rep;
    if (!distinctAtTwo(rep, L)) return rep;
    if (!generationMatches(rep, L, "V0", "McUinf")) return rep;

    const auto one = [](unsigned m) { return std::vector<BooleanFunction>{BooleanFunction::constant(m, true)}; };
    const auto ox = [](const BooleanFunction& f) { return !f[0] && !isMonotone(f); };
    const auto ix = [](const BooleanFunction& f) { return f[0] && !antitone(f); };
    const auto buildOX = [](const AlphaBeta& ab, unsigned m) { return recipeOX(ab, m); };
    const auto buildIX = [](const AlphaBeta& ab, unsigned m) { return recipeIX(ab, m); };
    const std::vector<Claim> claims{
        {"e", "M0", fixedRecipe([](unsigned m) { return plus(prs(m), {BooleanFunction::disjunction(m)}); }), phiM},
        {"f", "Mneg0", fixedRecipe([=](unsigned m) { return plus(negPrs(m), one(m)); }), phiMneg},
        {"g", "M", fixedRecipe([=](unsigned m) { return plus(prs(m), one(m)); }), phiM},
        {"h", "Mneg", fixedRecipe([=](unsigned m) { return plus(negPrs(m), one(m)); }), phiMneg},
        {"i", "OX", alphaRecipe(ox, false, buildOX), witnessOX},
        {"j", "IX", alphaRecipe(ix, true, buildIX), witnessOX},
        {"k", "OXC1", alphaRecipe(ox, false, buildOX), witnessOX},
        {"l", "IXC0", alphaRecipe(ix, true, buildIX), witnessOX},
        {"m", "All", fixedRecipe([](unsigned m) { return recipeOXAll(m); }), witnessOX},
    };
    claimsHold(rep, L, claims, "V0", "McUinf");
    return rep;
}

CheckReport tableStability(const SuiteConfig&) {
    CheckReport rep;
    bounded(rep, "outer arity <= 3 with inner arity 2, and outer arity <= 2 with inner arity 3");
    struct Row {
        std::string name;
        Pred pred;
        std::string right, left;
    };
    const std::vector<Row> rows{
        {"All", kAll, "All", "All"},
        {"OX+C1", unite(kOX, kVak1), "OX", "M"},
        {"IX+C0", unite(kIX, kVak0), "OX", "M"},
        {"XI+C0", unite(kXI, kVak0), "XI", "M"},
        {"XO+C1", unite(kXO, kVak1), "XI", "M"},
        {"OX", kOX, "OX", "OX"},
        {"IX", kIX, "OX", "XI"},
        {"XI", kXI, "XI", "XI"},
        {"XO", kXO, "XI", "OX"},
        {"M", kM, "M", "M"},
        {"Mneg", kMneg, "M", "M"},
        {"M0", kM0, "M0", "M0"},
        {"Mneg0", kMneg0, "M0", "M1"},
        {"M1", kM1, "M1", "M1"},
        {"Mneg1", kMneg1, "M1", "M0"},
        {"Vak", kVak, "All", "All"},
        {"Vak0", kVak0, "All", "OX"},
        {"Vak1", kVak1, "All", "XI"},
        {"Empty", kEmpty, "All", "All"},
    };
    const Registry& reg = Registry::standard();
    const std::vector<std::pair<unsigned, unsigned>> bounds{{3, 2}, {2, 3}};
    for (const auto& row : rows) {
        const auto K = FunctionClass::fromPredicate(row.name, row.pred);
        for (const auto& C : reg.clones()) {
            for (bool right : {true, false}) {
                const std::string& limit = right ? row.right : row.left;
                const bool expected = reg.isSubclone(C.id, limit);
                const CheckReport sub = right ? isRightStable(K, C, bounds) : isLeftStable(K, C, bounds);
                const bool observed = sub.status != CheckStatus::Fail;
                rep.count(right ? "rightChecks" : "leftChecks");
                if (expected != observed) {
                    rep.fail({{"row", row.name},
                              {"clone", C.id},
                              {"side", right ? "right" : "left"},
                              {"expectedStable", expected},
                              {"observedStable", observed},
                              {"violation", sub.counterexample}});
                    return rep;
                }
            }
        }
        rep.count("rows");
    }
    return rep;
}

namespace {

struct Instance {
    FunctionSet F;
    std::string c1, c2;
    unsigned m = 1;

    json toJson() const { return {{"generators", formats(F)}, {"C1", c1}, {"C2", c2}, {"arity", m}}; }
};

FunctionSet gen(const FunctionSet& F, const std::string& c1, const std::string& c2, unsigned m) {
    if (F.empty()) return {};
    GenerationRequest req;
    req.generators = F;
    req.sourceClone = c1;
    req.targetClone = c2;
    req.outputArity = m;
    return generateClonoid(req);
}

FunctionSet randomSet(std::mt19937_64& rng, const Pred& keep) {
    std::uniform_int_distribution<unsigned> arity(1, 2), size(1, 2);
    std::vector<BooleanFunction> members;
    const unsigned s = size(rng);
    while (members.size() < s) {
        const unsigned a = arity(rng);
        BooleanFunction f = BooleanFunction::fromWord(a, rng() & tailMask(a));
        if (keep(f)) members.push_back(std::move(f));
    }
    return FunctionSet(members);
}

const std::string& pick(std::mt19937_64& rng, const std::vector<std::string>& ids) {
    return ids[std::uniform_int_distribution<std::size_t>(0, ids.size() - 1)(rng)];
}

std::vector<std::string> cloneIds(const std::function<bool(const std::string&)>& keep) {
    std::vector<std::string> out;
    for (const auto& c : Registry::standard().clones())
        if (keep(c.id)) out.push_back(c.id);
    return out;
}

FunctionSet mapSet(const FunctionSet& K, BooleanFunction (*op)(const BooleanFunction&)) {
    std::vector<BooleanFunction> out;
    for (const auto& f : K) out.push_back(op(f));
    return FunctionSet(out);
}

FunctionSet filterSet(const FunctionSet& K, const Pred& p) {
    std::vector<BooleanFunction> out;
    for (const auto& f : K)
        if (p(f)) out.push_back(f);
    return FunctionSet(out);
}

FunctionSet constants(unsigned m, bool zero, bool one) {
    std::vector<BooleanFunction> out;
    if (zero) out.push_back(BooleanFunction::constant(m, false));
    if (one) out.push_back(BooleanFunction::constant(m, true));
    return FunctionSet(out);
}

bool expectEqual(CheckReport& rep, const std::string& lemma, const Instance& inst, const FunctionSet& expected,
                 const FunctionSet& actual) {
    rep.count("assertions");
    if (expected == actual) return true;
    json cex = inst.toJson();
    cex["lemma"] = lemma;
    cex["expected"] = formats(expected);
    cex["actual"] = formats(actual);
    rep.fail(cex);
    return false;
}

// {f(g_1, ..., g_n) : f ∈ I, g_i ∈ J}, all members of J sharing one arity.
FunctionSet composeSets(const FunctionSet& I, const std::vector<BooleanFunction>& J) {
    std::vector<BooleanFunction> out;
    for (const auto& f : I) {
        const unsigned n = f.arity();
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<BooleanFunction> gs;
            for (auto i : idx) gs.push_back(J[i]);
            out.push_back(compose(f, gs));
            unsigned k = 0;
            while (k < n && ++idx[k] == J.size()) idx[k++] = 0;
            if (k == n) break;
        }
    }
    return FunctionSet(out);
}

} // namespace

CheckReport dualityKnid(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "100 random instances with generators of arity <= 2 and output arity <= 3");
    auto rng = rngFor(cfg, "duality-knid");
    rep.count("seed", static_cast<std::int64_t>(cfg.seed));
    const Registry& reg = Registry::standard();
    const auto all = cloneIds([](const std::string&) { return true; });
    std::uniform_int_distribution<unsigned> arity(1, 3);
    for (int i = 0; i < 100; ++i) {
        Instance inst{randomSet(rng, kAll), pick(rng, all), pick(rng, all), arity(rng)};
        const std::string d1 = reg.dualClone(reg.get(inst.c1)).id, d2 = reg.dualClone(reg.get(inst.c2)).id;
        const FunctionSet K = gen(inst.F, inst.c1, inst.c2, inst.m);
        if (!expectEqual(rep, "inner-negation", inst, transformSet(K, TransformKind::InnerNegate),
                         gen(transformSet(inst.F, TransformKind::InnerNegate), d1, inst.c2, inst.m)))
            return rep;
        if (!expectEqual(rep, "negation", inst, transformSet(K, TransformKind::Negate),
                         gen(transformSet(inst.F, TransformKind::Negate), inst.c1, d2, inst.m)))
            return rep;
        if (!expectEqual(rep, "dual", inst, transformSet(K, TransformKind::Dual),
                         gen(transformSet(inst.F, TransformKind::Dual), d1, d2, inst.m)))
            return rep;

        // I J = I^n J̄ for an outer set I and inner functions J of arity m.
        std::vector<BooleanFunction> J;
        for (int j = 0; j < 3; ++j) J.push_back(BooleanFunction::fromWord(inst.m, rng() & tailMask(inst.m)));
        std::vector<BooleanFunction> Jbar;
        for (const auto& g : J) Jbar.push_back(negate(g));
        if (!expectEqual(rep, "set-composition", inst, composeSets(inst.F, J),
                         composeSets(mapSet(inst.F, innerNegate), Jbar)))
            return rep;
        rep.count("instances");
    }
    return rep;
}

CheckReport dmLemmas(const SuiteConfig& cfg) {
    CheckReport rep;
    bounded(rep, "100 random instances with generators of arity <= 2 and output arity <= 3");
    auto rng = rngFor(cfg, "dm-lemmas");
    rep.count("seed", static_cast<std::int64_t>(cfg.seed));
    const Registry& reg = Registry::standard();
    const auto all = cloneIds([](const std::string&) { return true; });
    const auto belowOX = cloneIds([&](const std::string& id) { return reg.isSubclone(id, "OX"); });
    const auto belowXI = cloneIds([&](const std::string& id) { return reg.isSubclone(id, "XI"); });

    // C2 and C2 ∪ Vak_S pairs; the union is verified at arities 1..3 first.
    struct Extension {
        std::string base, extended;
        bool zero, one;
    };
    const std::vector<Extension> extensions{
        {"Ic", "I0", true, false},         {"Ic", "I1", false, true},          {"Ic", "I", true, true},
        {"Istar", "Omega1", true, true},   {"Vc", "V0", true, false},          {"Vc", "V1", false, true},
        {"Vc", "V", true, true},           {"Lambdac", "Lambda0", true, false}, {"Lambdac", "Lambda1", false, true},
        {"Lambdac", "Lambda", true, true}, {"Mc", "M0", true, false},          {"Mc", "M1", false, true},
        {"Mc", "M", true, true},           {"McUinf", "MUinf", true, false},
    };
    for (const auto& e : extensions)
        for (unsigned m = 1; m <= 3; ++m) {
            const FunctionSet expected = arityPart(reg.get(e.base), m).unite(constants(m, e.zero, e.one));
            if (!(arityPart(reg.get(e.extended), m) == expected)) {
                rep.fail({{"lemma", "extension-precondition"}, {"base", e.base}, {"extended", e.extended}, {"arity", m}});
                return rep;
            }
        }

    std::uniform_int_distribution<unsigned> arity(1, 3);
    std::uniform_int_distribution<std::size_t> extPick(0, extensions.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const unsigned m = arity(rng);
        Instance inst{randomSet(rng, kAll), pick(rng, all), "Ic", m};
        const FunctionSet K = gen(inst.F, inst.c1, "Ic", m);
        const FunctionSet Kbar = mapSet(K, negate);
        const FunctionSet Vak = constants(m, true, true);
        if (!expectEqual(rep, "negation", inst, Kbar, gen(mapSet(inst.F, negate), inst.c1, "Ic", m))) return rep;
        if (!expectEqual(rep, "const0", inst, K.unite(constants(m, true, false)), gen(inst.F, inst.c1, "I0", m)))
            return rep;
        if (!expectEqual(rep, "const1", inst, K.unite(constants(m, false, true)), gen(inst.F, inst.c1, "I1", m)))
            return rep;
        if (!expectEqual(rep, "constants", inst, K.unite(Vak), gen(inst.F, inst.c1, "I", m))) return rep;
        const FunctionSet star = gen(inst.F, inst.c1, "Istar", m);
        if (!expectEqual(rep, "negations", inst, K.unite(Kbar), star)) return rep;
        if (!expectEqual(rep, "negations-closed", inst, star, mapSet(star, negate))) return rep;
        if (!expectEqual(rep, "negations-constants", inst, K.unite(Kbar).unite(Vak), gen(inst.F, inst.c1, "Omega1", m)))
            return rep;

        const Extension& e = extensions[extPick(rng)];
        Instance ext{inst.F, inst.c1, e.base, m};
        const FunctionSet base = gen(inst.F, inst.c1, e.base, m);
        ext.c2 = e.extended;
        if (!expectEqual(rep, "constant-extension", ext, base.unite(constants(m, e.zero, e.one)),
                         gen(inst.F, inst.c1, e.extended, m)))
            return rep;

        const bool a = rng() & 1u;
        const Pred keep = a ? kIX : kOX;
        Instance pres{randomSet(rng, keep), pick(rng, belowOX), pick(rng, a ? belowXI : belowOX), m};
        const FunctionSet P = gen(pres.F, pres.c1, pres.c2, m);
        if (!expectEqual(rep, a ? "value-at-0-is-1" : "value-at-0-is-0", pres, filterSet(P, keep), P)) return rep;

        Instance kax{inst.F, pick(rng, belowOX), "Ic", m};
        const FunctionSet KK = gen(kax.F, kax.c1, "Ic", m);
        if (!expectEqual(rep, "split-OX", kax, filterSet(KK, kOX), gen(filterSet(kax.F, kOX), kax.c1, "Ic", m)))
            return rep;
        if (!expectEqual(rep, "split-IX", kax, filterSet(KK, kIX), gen(filterSet(kax.F, kIX), kax.c1, "Ic", m)))
            return rep;
        rep.count("instances");
    }
    return rep;
}

} // namespace clonoid::checks
