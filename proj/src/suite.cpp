#include "clonoid/suite.hpp"

#include "checks.hpp"
#include "clonoid/engine.hpp"
#include "clonoid/families.hpp"
#include "clonoid/kernels.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace clonoid {

namespace {

using nlohmann::json;

std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t satAdd(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t power(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = satMul(r, base);
    return r;
}

std::vector<unsigned> paramList(const SuiteConfig& cfg, const char* key, std::vector<unsigned> dflt) {
    if (!cfg.params.contains(key)) return dflt;
    const auto& v = cfg.params[key];
    if (v.is_array()) return v.get<std::vector<unsigned>>();
    return {v.get<unsigned>()};
}

// Σ over (m, n) of poolSize(n)^m.
template <class Pool>
std::uint64_t gridCost(const SuiteConfig& cfg, std::vector<unsigned> ms, std::vector<unsigned> ns, Pool pool) {
    std::uint64_t c = 0;
    for (unsigned m : paramList(cfg, "m", ms))
        for (unsigned n : paramList(cfg, "n", ns)) c = satAdd(c, power(pool(n), m));
    return c;
}

// The largest single generation request; the budget bounds each engine request.
std::uint64_t membershipCost(const std::vector<unsigned>& members, const std::vector<unsigned>& ns,
                             const std::string& c1, bool q) {
    const Registry& reg = Registry::standard();
    std::uint64_t c = 0;
    for (unsigned n : ns) {
        GenerationRequest req;
        for (unsigned k : members) req.generators = req.generators.unite(FunctionSet{q ? pippengerQ(k) : pippengerF(k)});
        req.sourceClone = c1;
        req.targetClone = "All";
        req.outputArity = n;
        req.budget = std::numeric_limits<std::uint64_t>::max();
        c = std::max(c, estimateCost(req, reg));
    }
    return c;
}

std::uint64_t constantCost(std::uint64_t c) { return c; }

std::vector<CheckInfo> buildCatalog() {
    std::vector<CheckInfo> cat;
    auto add = [&](std::string id, std::string summary, std::function<std::uint64_t(const SuiteConfig&)> cost,
                   std::function<CheckReport(const SuiteConfig&)> run) {
        cat.push_back(CheckInfo{std::move(id), std::move(summary), std::move(cost), std::move(run)});
    };
    add("dm-lemmas", "closure identities for (C, Ic)-clonoids and their constant and negation extensions",
        [](const SuiteConfig&) { return constantCost(40'000'000); }, checks::dmLemmas);
    add("duality-knid", "inner negation, negation and duality of generated clonoids",
        [](const SuiteConfig&) { return constantCost(20'000'000); }, checks::dualityKnid);
    add("fn-omega1-lemma", "composites of f_m over Omega1, I0, I1 comparable with f_n force m = n",
        [](const SuiteConfig& c) {
            return satAdd(gridCost(c, {5, 6}, {5, 6}, [](unsigned n) { return 2ull * n + 2; }),
                          satMul(2, gridCost(c, {5, 6}, {5, 6}, [](unsigned n) { return n + 1ull; })));
        },
        checks::fnOmega1Lemma);
    add("lemma-fml", "affine composites of f_m equal to f_n or its negation force m = n",
        [](const SuiteConfig&) { return constantCost(8'000ull << 6); }, checks::lemmaFml);
    add("lemma-fn-v", "disjunctive composites of f_m above f_n vanishing at 1 force m = n",
        [](const SuiteConfig& c) {
            return gridCost(c, {4, 5}, {4, 5}, [](unsigned n) { return (1ull << n) + 1; });
        },
        checks::lemmaFnV);
    add("prop-fi-vj", "negated f_n under disjunctive composition; alternation-number criterion for monotone minors",
        [](const SuiteConfig&) {
            return std::max<std::uint64_t>(membershipCost({4, 5}, {4, 5}, "V", false), 4'000'000);
        },
        checks::propFiVj);
    add("prop-i0i1-uinf", "f_n in the (I0, Uinf) and (I1, Uinf) clonoids of F_S iff n in S",
        [](const SuiteConfig&) { return membershipCost({5, 6}, {5, 6}, "I0", false); },
        checks::propI0I1Uinf);
    add("prop-imcuinf", "the seven (I, McUinf)-clonoids",
        [](const SuiteConfig&) { return constantCost(30'000'000); }, checks::propIMcUinf);
    add("prop-istar-uinf", "q_n in the (Istar, Uinf) clonoid of Q_S iff n in S",
        [](const SuiteConfig&) { return membershipCost({3, 4, 5}, {3, 4, 5}, "Istar", true); },
        checks::propIstarUinf);
    add("prop-omega1-lambda", "f_n in the (Omega1, Lambda) clonoid of F_S iff n in S",
        [](const SuiteConfig&) { return membershipCost({5, 6}, {5, 6}, "Omega1", false); },
        checks::propOmega1Lambda);
    add("prop-omega1-omega1", "f_n in the (Omega1, Omega1) clonoid of F_S iff n in S",
        [](const SuiteConfig&) { return membershipCost({5, 6}, {5, 6}, "Omega1", false); },
        checks::propOmega1Omega1);
    add("prop-uk", "K U2 and Uinf (K U2) agree for sampled K in OX",
        [](const SuiteConfig&) { return constantCost(50ull * 64'000); }, checks::propUk);
    add("prop-uk-hom", "U_k minors versus homomorphisms of disjointness hypergraphs",
        [](const SuiteConfig&) { return constantCost(2ull * 128 * 64'000); }, checks::propUkHom);
    add("prop-vomcuinf", "the thirteen (V0, McUinf)-clonoids",
        [](const SuiteConfig&) { return constantCost(40'000'000); }, checks::propVoMcUinf);
    add("qn-istar-lemma", "composites of q_m over Istar above q_n force m = n",
        [](const SuiteConfig& c) { return gridCost(c, {3, 4, 5}, {3, 4, 5}, [](unsigned n) { return 2ull * n; }); },
        checks::qnIstarLemma);
    add("table-stability", "right and left stability of the listed sets against every registry clone",
        [](const SuiteConfig&) { return constantCost(60'000'000); }, checks::tableStability);
    add("theta-lemma", "the meet of f_n over the g^S maps is f_{n+2}, and likewise for q_n",
        [](const SuiteConfig&) { return constantCost(2ull * 35 * 128 * 8); }, checks::thetaLemma);
    std::sort(cat.begin(), cat.end(), [](const CheckInfo& a, const CheckInfo& b) { return a.id < b.id; });
    return cat;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

BooleanFunction SuiteConfig::fixture(const std::string& name) const {
    if (auto it = fixtures.find(name); it != fixtures.end()) return it->second;
    if (name == "f5") return pippengerF(5);
    if (name == "q5") return pippengerQ(5);
    throw DomainError("unknown fixture '" + name + "' (expected f5 or q5)");
}

json SuiteConfig::toJson() const {
    json j{{"budget", budget}, {"seed", seed}, {"arityCap", arityCap}};
    if (!fixtures.empty()) {
        json fx = json::object();
        for (const auto& [k, v] : fixtures) fx[k] = format(v);
        j["fixtures"] = fx;
    }
    if (!params.empty()) j["params"] = params;
    return j;
}

const std::vector<CheckInfo>& checkCatalog() {
    static const std::vector<CheckInfo> cat = buildCatalog();
    return cat;
}

const CheckInfo* findCheck(const std::string& id) {
    for (const auto& c : checkCatalog())
        if (c.id == id) return &c;
    return nullptr;
}

CheckReport runCheck(const std::string& id, const SuiteConfig& cfg) {
    const CheckInfo* info = findCheck(id);
    if (!info) throw DomainError("unknown check '" + id + "'");
    const auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    const std::uint64_t cost = info->cost(cfg);
    if (cost > cfg.budget) {
        rep.checkId = id;
        rep.status = CheckStatus::SkippedBudget;
        rep.count("estimatedCost", static_cast<std::int64_t>(std::min<std::uint64_t>(cost, INT64_MAX)));
        rep.count("budget", static_cast<std::int64_t>(std::min<std::uint64_t>(cfg.budget, INT64_MAX)));
        rep.notes.push_back("estimated cost " + std::to_string(cost) + " exceeds budget " +
                            std::to_string(cfg.budget));
    } else {
        const unsigned savedCap = arityCap();
        setArityCap(std::max(cfg.arityCap, 8u));
        try {
            rep = info->run(cfg);
        } catch (const BudgetExceeded& e) {
            rep = CheckReport{};
            rep.status = CheckStatus::SkippedBudget;
            rep.notes.push_back(e.what());
        } catch (...) {
            setArityCap(savedCap);
            throw;
        }
        setArityCap(savedCap);
        rep.checkId = id;
    }
    rep.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

CheckReport runCheck(const std::string& id, const SuiteConfig& cfg, const json& params) {
    SuiteConfig c = cfg;
    c.params = params.is_null() ? json::object() : params;
    return runCheck(id, c);
}

bool SuiteReport::anyFail() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.status == CheckStatus::Fail; });
}

std::size_t SuiteReport::countStatus(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckReport& r) { return r.status == s; }));
}

json SuiteReport::toJson() const {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back(c.toJson(config.timing));
    return json{{"suiteVersion", suiteVersion},
                {"scope", "bounded verification"},
                {"config", config.toJson()},
                {"checks", arr}};
}

SuiteReport runChecks(const std::vector<std::string>& ids, const SuiteConfig& cfg) {
    for (const auto& id : ids)
        if (!findCheck(id)) throw DomainError("unknown check '" + id + "'");
    SuiteReport rep;
    rep.config = cfg;
    for (const auto& id : ids) rep.checks.push_back(runCheck(id, cfg));
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.checkId < b.checkId; });
    return rep;
}

SuiteReport runAll(const SuiteConfig& cfg) {
    std::vector<std::string> ids;
    for (const auto& c : checkCatalog()) ids.push_back(c.id);
    return runChecks(ids, cfg);
}

namespace {

struct AffineSearch {
    const BooleanFunction& outer;
    const BooleanFunction& target;
    unsigned m, n;
    bool inputSymmetric;
    std::vector<std::uint32_t> img; // image tuple (as outer index) of each input index
    std::vector<std::vector<std::uint32_t>> byValue; // outer indices with outer value 0 / 1
    std::uint64_t nodes = 0;

    bool extend(unsigned t) {
        if (t == n) return true;
        const std::uint64_t unit = std::uint64_t{1} << t;
        for (std::uint32_t c : byValue[target[unit]]) {
            if (inputSymmetric && t > 0 && c < img[unit >> 1]) continue;
            ++nodes;
            img[unit] = c;
            bool ok = true;
            for (std::uint64_t y = 1; y < unit && ok; ++y) {
                const std::uint32_t v = img[y] ^ c ^ img[0];
                img[unit | y] = v;
                ok = outer[v] == target[unit | y];
            }
            if (ok && extend(t + 1)) return true;
        }
        return false;
    }
};

bool isSymmetricFunction(const BooleanFunction& f) {
    const auto labels = symmetryClasses(f);
    for (int l : labels)
        if (l != labels.front()) return false;
    return true;
}

} // namespace

std::optional<std::vector<BooleanFunction>> findAffineInner(const BooleanFunction& outer,
                                                            const BooleanFunction& target,
                                                            std::uint64_t* nodes) {
    const unsigned m = outer.arity(), n = target.arity();
    if (m == 0 || m > 20 || n > 20) throw DomainError("findAffineInner: arities must lie in 1..20");
    AffineSearch s{outer, target, m, n, isSymmetricFunction(target), {}, {{}, {}}, 0};
    s.img.assign(std::size_t{1} << n, 0);
    for (std::uint32_t c = 0; c < outer.tableSize(); ++c) s.byValue[outer[c]].push_back(c);

    // A symmetric outer function lets g(0) be taken with its ones in the last places;
    // one invariant under complementing every input also allows weight <= m/2.
    const bool outerSymmetric = isSymmetricFunction(outer);
    const bool reflexive = innerNegate(outer) == outer;
    std::vector<std::uint32_t> starts;
    if (outerSymmetric) {
        for (unsigned w = 0; w <= m; ++w)
            if (!reflexive || 2 * w <= m) starts.push_back((std::uint32_t{1} << w) - 1);
    } else {
        for (std::uint32_t c = 0; c < outer.tableSize(); ++c) starts.push_back(c);
    }
    bool found = false;
    for (std::uint32_t d : starts) {
        if (outer[d] != target[0]) continue;
        ++s.nodes;
        s.img[0] = d;
        if (s.extend(0)) {
            found = true;
            break;
        }
    }
    if (nodes) *nodes = s.nodes;
    if (!found) return std::nullopt;
    std::vector<BooleanFunction> inner;
    for (unsigned i = 1; i <= m; ++i) {
        const unsigned shift = m - i;
        inner.push_back(BooleanFunction::fromPredicate(n, [&](std::uint64_t x) { return (s.img[x] >> shift) & 1u; }));
    }
    return inner;
}

bool altCriterionMinor(const BooleanFunction& f, const BooleanFunction& g) {
    const unsigned af = altNumber(f), ag = altNumber(g);
    return af < ag || (af == ag && f[0] == g[0]);
}

bool monotoneMinorBrute(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.arity() > 3) throw DomainError("monotoneMinorBrute: f must have arity <= 3");
    const auto pool = arityPart(Registry::standard().get("M"), f.arity());
    std::vector<std::uint64_t> words;
    for (const auto& h : pool) words.push_back(h.word0());
    return findInnerTuple(g, words, f.arity(), f.word0()).has_value();
}

namespace checks {

std::mt19937_64 rngFor(const SuiteConfig& cfg, const std::string& checkId) {
    const std::uint64_t h = fnv1a(checkId);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return std::mt19937_64(seq);
}

} // namespace checks

} // namespace clonoid
