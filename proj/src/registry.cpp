#include "clonoid/registry.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <mutex>
#include <unordered_set>

namespace clonoid {

namespace {

using Kind = CloneShape::Kind;

std::uint64_t fullMask(unsigned n) { return (std::uint64_t{1} << n) - 1; }

BooleanFunction unaryConst(bool v) { return BooleanFunction::constant(1, v); }
BooleanFunction notFn() { return BooleanFunction::negatedProjection(1, 1); }
BooleanFunction and2() { return BooleanFunction::conjunction(2); }
BooleanFunction or2() { return BooleanFunction::disjunction(2); }
BooleanFunction xor2() { return BooleanFunction::parity(2); }
BooleanFunction xor3() { return BooleanFunction::parity(3); }

CloneDescriptor make(std::string id, std::string name, std::string desc, CloneShape shape, std::string dual,
                     std::vector<BooleanFunction> gens = {}, bool exact = false) {
    CloneDescriptor c;
    c.id = std::move(id);
    c.name = std::move(name);
    c.description = std::move(desc);
    c.shape = shape;
    c.dualId = std::move(dual);
    c.generators = std::move(gens);
    c.generatorExact = exact;
    return c;
}

CloneShape unaryShape(bool neg, bool c0, bool c1) {
    CloneShape s;
    s.kind = Kind::EssentiallyUnary;
    s.allowNegation = neg;
    s.allowConst0 = c0;
    s.allowConst1 = c1;
    return s;
}

CloneShape semilatticeShape(Kind k, bool c0, bool c1) {
    CloneShape s;
    s.kind = k;
    s.allowConst0 = c0;
    s.allowConst1 = c1;
    return s;
}

CloneShape generalShape(bool t0, bool t1, bool mono, unsigned u = 0, unsigned w = 0) {
    CloneShape s;
    s.kind = Kind::General;
    s.t0 = t0;
    s.t1 = t1;
    s.monotone = mono;
    s.uRank = u;
    s.wRank = w;
    return s;
}

CloneShape affineShape(bool t0, bool t1, bool sd) {
    CloneShape s;
    s.kind = Kind::Affine;
    s.t0 = t0;
    s.t1 = t1;
    s.selfDual = sd;
    return s;
}

CloneShape selfDualShape(bool t0, bool mono) {
    CloneShape s;
    s.kind = Kind::SelfDual;
    s.t0 = t0;
    s.t1 = t0;
    s.monotone = mono;
    return s;
}

std::vector<CloneDescriptor> standardClones() {
    std::vector<CloneDescriptor> cs;
    const auto c0 = unaryConst(false);
    const auto c1 = unaryConst(true);
    cs.push_back(make("Ic", "Ic", "projections", unaryShape(false, false, false), "Ic", {}, true));
    cs.push_back(make("I0", "I0", "projections and constant 0", unaryShape(false, true, false), "I1", {c0}, true));
    cs.push_back(make("I1", "I1", "projections and constant 1", unaryShape(false, false, true), "I0", {c1}, true));
    cs.push_back(make("I", "I", "projections and constants", unaryShape(false, true, true), "I", {c0, c1}, true));
    cs.push_back(make("Istar", "I*", "projections and negated projections", unaryShape(true, false, false),
                      "Istar", {notFn()}, true));
    cs.push_back(make("Omega1", "Omega(1)", "essentially at most unary functions", unaryShape(true, true, true),
                      "Omega1", {notFn(), c0, c1}, true));

    cs.push_back(make("Vc", "Vc", "nonempty disjunctions", semilatticeShape(Kind::Disjunctive, false, false),
                      "Lambdac", {or2()}, true));
    cs.push_back(make("V0", "V0", "disjunctions and constant 0", semilatticeShape(Kind::Disjunctive, true, false),
                      "Lambda1", {or2(), c0}, true));
    cs.push_back(make("V1", "V1", "nonempty disjunctions and constant 1",
                      semilatticeShape(Kind::Disjunctive, false, true), "Lambda0", {or2(), c1}, true));
    cs.push_back(make("V", "V", "disjunctions and constants", semilatticeShape(Kind::Disjunctive, true, true), "Lambda",
                      {or2(), c0, c1}, true));
    cs.push_back(make("Lambdac", "Λc", "nonempty conjunctions", semilatticeShape(Kind::Conjunctive, false, false),
                      "Vc", {and2()}, true));
    cs.push_back(make("Lambda0", "Λ0", "nonempty conjunctions and constant 0",
                      semilatticeShape(Kind::Conjunctive, true, false), "V1", {and2(), c0}, true));
    cs.push_back(make("Lambda1", "Λ1", "conjunctions and constant 1", semilatticeShape(Kind::Conjunctive, false, true),
                      "V0", {and2(), c1}, true));
    cs.push_back(make("Lambda", "Λ", "conjunctions and constants", semilatticeShape(Kind::Conjunctive, true, true),
                      "V", {and2(), c0, c1}, true));

    cs.push_back(make("Lc", "Lc", "affine, 0- and 1-preserving", affineShape(true, true, false), "Lc", {xor3()}, true));
    cs.push_back(make("L0", "L0", "affine, 0-preserving", affineShape(true, false, false), "L1", {xor2()}, true));
    cs.push_back(make("L1", "L1", "affine, 1-preserving", affineShape(false, true, false), "L0",
                      {negate(xor2())}, true));
    cs.push_back(make("LS", "LS", "affine, self-dual", affineShape(false, false, true), "LS", {xor3(), notFn()}, true));
    cs.push_back(make("L", "L", "affine", affineShape(false, false, false), "L", {xor2(), c1}, true));

    cs.push_back(make("SM", "SM", "self-dual monotone", selfDualShape(false, true), "SM"));
    cs.push_back(make("Sc", "Sc", "self-dual, 0-preserving", selfDualShape(true, false), "Sc"));
    cs.push_back(make("S", "S", "self-dual", selfDualShape(false, false), "S"));

    cs.push_back(make("Mc", "Mc", "monotone, 0- and 1-preserving", generalShape(true, true, true), "Mc",
                      {and2(), or2()}, true));
    cs.push_back(make("M0", "M0", "monotone, 0-preserving", generalShape(true, false, true), "M1",
                      {and2(), or2(), c0}, true));
    cs.push_back(make("M1", "M1", "monotone, 1-preserving", generalShape(false, true, true), "M0",
                      {and2(), or2(), c1}, true));
    cs.push_back(make("M", "M", "monotone", generalShape(false, false, true), "M", {and2(), or2(), c0, c1}, true));

    for (unsigned k : {2u, 3u, kRankInfinity}) {
        const std::string r = rankName(k);
        const std::string rk = k == kRankInfinity ? "∞" : r;
        const std::string sep1 = "1-separating of rank " + rk;
        const std::string sep0 = "0-separating of rank " + rk;
        cs.push_back(make("McU" + r, "McU" + rk, "monotone, 0- and 1-preserving, " + sep1,
                          generalShape(true, true, true, k, 0), "McW" + r));
        cs.push_back(make("MU" + r, "MU" + rk, "monotone, " + sep1, generalShape(true, false, true, k, 0), "MW" + r));
        cs.push_back(make("TcU" + r, "TcU" + rk, "0- and 1-preserving, " + sep1, generalShape(true, true, false, k, 0),
                          "TcW" + r));
        cs.push_back(make("U" + r, "U" + rk, sep1, generalShape(true, false, false, k, 0), "W" + r));
        cs.push_back(make("McW" + r, "McW" + rk, "monotone, 0- and 1-preserving, " + sep0,
                          generalShape(true, true, true, 0, k), "McU" + r));
        cs.push_back(make("MW" + r, "MW" + rk, "monotone, " + sep0, generalShape(false, true, true, 0, k), "MU" + r));
        cs.push_back(make("TcW" + r, "TcW" + rk, "0- and 1-preserving, " + sep0, generalShape(true, true, false, 0, k),
                          "TcU" + r));
        cs.push_back(make("W" + r, "W" + rk, sep0, generalShape(false, true, false, 0, k), "U" + r));
    }

    cs.push_back(make("OI", "T0∩T1", "0- and 1-preserving", generalShape(true, true, false), "OI"));
    cs.push_back(make("OX", "T0", "0-preserving", generalShape(true, false, false), "XI"));
    cs.push_back(make("XI", "T1", "1-preserving", generalShape(false, true, false), "OX"));
    cs.push_back(make("All", "All", "all functions", generalShape(false, false, false), "All"));
    return cs;
}

std::vector<std::pair<std::string, std::string>> standardCovers() {
    std::vector<std::pair<std::string, std::string>> e = {
        {"Ic", "Istar"}, {"Istar", "Omega1"}, {"I", "Omega1"}, {"Omega1", "L"}, {"Ic", "I0"}, {"I0", "I"},
        {"Ic", "I1"}, {"I1", "I"}, {"Ic", "Lc"}, {"Ic", "SM"}, {"I0", "L0"}, {"I1", "L1"}, {"Istar", "LS"},
        {"Ic", "Lambdac"}, {"I0", "Lambda0"}, {"I1", "Lambda1"}, {"I", "Lambda"},
        {"Ic", "Vc"}, {"I0", "V0"}, {"I1", "V1"}, {"I", "V"},
        {"Lambdac", "Lambda0"}, {"Lambda0", "Lambda"}, {"Lambdac", "Lambda1"}, {"Lambda1", "Lambda"},
        {"Lambdac", "McUinf"}, {"Lambda0", "MUinf"}, {"Lambda1", "M1"}, {"Lambda", "M"},
        {"Vc", "V0"}, {"V0", "V"}, {"Vc", "V1"}, {"V1", "V"},
        {"Vc", "McWinf"}, {"V1", "MWinf"}, {"V0", "M0"}, {"V", "M"},
        {"MU2", "M0"}, {"U2", "OX"}, {"MW2", "M1"}, {"W2", "XI"},
        {"SM", "McU2"}, {"SM", "McW2"},
        {"Lc", "LS"}, {"LS", "L"}, {"Lc", "L0"}, {"L0", "L"}, {"Lc", "L1"}, {"L1", "L"}, {"Lc", "Sc"},
        {"LS", "S"}, {"L0", "OX"}, {"L1", "XI"}, {"L", "All"},
        {"SM", "Sc"}, {"Sc", "S"}, {"Sc", "OI"}, {"S", "All"},
        {"Mc", "M0"}, {"M0", "M"}, {"Mc", "M1"}, {"M1", "M"}, {"Mc", "OI"}, {"M0", "OX"}, {"M1", "XI"}, {"M", "All"},
        {"OI", "OX"}, {"OX", "All"}, {"OI", "XI"}, {"XI", "All"},
    };
    for (std::string x : {"U", "W"}) {
        const std::vector<std::pair<std::string, std::string>> chain = {
            {"McXinf", "TcXinf"}, {"TcXinf", "Xinf"}, {"McXinf", "MXinf"}, {"MXinf", "Xinf"},
            {"McXinf", "McX3"}, {"MXinf", "MX3"}, {"TcXinf", "TcX3"}, {"Xinf", "X3"},
            {"McX3", "TcX3"}, {"TcX3", "X3"}, {"McX3", "MX3"}, {"MX3", "X3"},
            {"McX3", "McX2"}, {"MX3", "MX2"}, {"TcX3", "TcX2"}, {"X3", "X2"},
            {"McX2", "TcX2"}, {"TcX2", "X2"}, {"McX2", "MX2"}, {"MX2", "X2"},
            {"McX2", "Mc"}, {"TcX2", "OI"},
        };
        for (auto [a, b] : chain) {
            auto sub = [&](std::string s) {
                for (std::size_t p = s.find('X'); p != std::string::npos; p = s.find('X', p + 1))
                    if (s != "OX" && s != "XI") s[p] = x[0];
                return s;
            };
            e.emplace_back(sub(a), sub(b));
        }
    }
    return e;
}

// Smallest number of masks whose union is `full`, searched by iterative deepening.
bool coverWithin(const std::vector<std::uint64_t>& masks, std::uint64_t covered, std::uint64_t full,
                 unsigned depth) {
    if (covered == full) return true;
    if (depth == 0) return false;
    const std::uint64_t missing = full & ~covered;
    const std::uint64_t pick = missing & (~missing + 1);
    for (std::uint64_t m : masks)
        if ((m & pick) && coverWithin(masks, covered | m, full, depth - 1)) return true;
    return false;
}

std::optional<unsigned> minCover(std::vector<std::uint64_t> masks, std::uint64_t full) {
    std::uint64_t all = 0;
    for (auto m : masks) all |= m;
    if ((all & full) != full) return std::nullopt;
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> maximal;
    for (auto m : masks) {
        bool dominated = false;
        for (auto o : masks)
            if (o != m && (m & ~o) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(m);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
    for (unsigned k = 1;; ++k)
        if (coverWithin(maximal, 0, full, k)) return k;
}

bool isProjectionOf(const BooleanFunction& f, unsigned i, bool negated) {
    const unsigned n = f.arity();
    for (std::uint64_t a = 0; a < f.tableSize(); ++a)
        if (f[a] != ((((a >> (n - i)) & 1u) != 0) != negated)) return false;
    return true;
}

bool containsByShape(const CloneShape& s, const BooleanFunction& f) {
    const unsigned n = f.arity();
    const std::uint64_t top = f.tableSize() - 1;
    switch (s.kind) {
    case Kind::EssentiallyUnary: {
        if (f.isConstant(false)) return s.allowConst0;
        if (f.isConstant(true)) return s.allowConst1;
        for (unsigned i = 1; i <= n; ++i) {
            if (s.allowProjection && isProjectionOf(f, i, false)) return true;
            if (s.allowNegation && isProjectionOf(f, i, true)) return true;
        }
        return false;
    }
    case Kind::Conjunctive: {
        if (f.isConstant(false)) return s.allowConst0;
        if (f.isConstant(true)) return s.allowConst1;
        std::uint64_t v = top;
        for (auto t : f.truePoints()) v &= t;
        for (std::uint64_t a = 0; a <= top; ++a)
            if (f[a] != ((a & v) == v)) return false;
        return true;
    }
    case Kind::Disjunctive: {
        if (f.isConstant(false)) return s.allowConst0;
        if (f.isConstant(true)) return s.allowConst1;
        std::uint64_t u = 0;
        for (auto t : f.falsePoints()) u |= t;
        const std::uint64_t vars = top & ~u;
        for (std::uint64_t a = 0; a <= top; ++a)
            if (f[a] != ((a & vars) != 0)) return false;
        return true;
    }
    case Kind::Affine:
        if (!isAffine(f)) return false;
        if (s.t0 && f[0]) return false;
        if (s.t1 && !f[top]) return false;
        if (s.selfDual && !isSelfDual(f)) return false;
        return true;
    case Kind::SelfDual:
        if (!isSelfDual(f)) return false;
        if (s.t0 && f[0]) return false;
        if (s.monotone && !isMonotone(f)) return false;
        return true;
    case Kind::General:
        if (s.t0 && f[0]) return false;
        if (s.t1 && !f[top]) return false;
        if (s.monotone && !isMonotone(f)) return false;
        if (s.uRank && !isSeparating1(f, s.uRank)) return false;
        if (s.wRank && !isSeparating0(f, s.wRank)) return false;
        return true;
    }
    return false;
}

std::mutex g_cacheMutex;
std::map<std::string, FunctionSet>& partCache() {
    static std::map<std::string, FunctionSet> cache;
    return cache;
}

std::string cacheKey(const CloneDescriptor& c, unsigned m, const char* method) {
    std::string key = c.id + "|" + method + "|" + std::to_string(m) + "|";
    for (const auto& g : c.generators) key += format(g) + ",";
    return key;
}

} // namespace

std::string rankName(unsigned k) { return k == kRankInfinity ? "inf" : std::to_string(k); }

// ----------------------------------------------------------------- Registry

Registry::Registry(std::vector<CloneDescriptor> clones, std::vector<std::pair<std::string, std::string>> covers)
    : clones_(std::move(clones)), covers_(std::move(covers)) {
    for (std::size_t i = 0; i < clones_.size(); ++i) index_.emplace(clones_[i].id, i);
    const std::size_t n = clones_.size();
    below_.assign(n, std::vector<bool>(n, false));
    std::vector<std::vector<std::size_t>> up(n);
    for (const auto& [a, b] : covers_) {
        auto ia = index_.find(a), ib = index_.find(b);
        if (ia == index_.end() || ib == index_.end())
            throw DomainError("covering relation names unknown clone " + (ia == index_.end() ? a : b));
        up[ia->second].push_back(ib->second);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> stack{i};
        below_[i][i] = true;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t y : up[x])
                if (!below_[i][y]) {
                    below_[i][y] = true;
                    stack.push_back(y);
                }
        }
    }
    for (const auto& c : clones_)
        if (!index_.count(c.dualId)) throw DomainError("clone " + c.id + " names unknown dual " + c.dualId);
}

const Registry& Registry::standard() {
    static const Registry reg(standardClones(), standardCovers());
    return reg;
}

const CloneDescriptor* Registry::find(std::string_view id) const noexcept {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &clones_[it->second];
}

const CloneDescriptor& Registry::get(std::string_view id) const {
    if (const auto* c = find(id)) return *c;
    throw DomainError("unknown clone '" + std::string(id) + "' (see --list-clones)");
}

const CloneDescriptor& Registry::dualClone(const CloneDescriptor& c) const { return get(c.dualId); }

bool Registry::isSubclone(std::string_view a, std::string_view b) const {
    const auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end()) throw DomainError("unknown clone in isSubclone");
    return below_[ia->second][ib->second];
}

// --------------------------------------------------------------- predicates

std::optional<unsigned> minZeroCover(const BooleanFunction& f) {
    const std::uint64_t full = fullMask(f.arity());
    std::vector<std::uint64_t> masks;
    for (auto t : f.truePoints()) masks.push_back(~t & full);
    if (masks.empty()) return std::nullopt;
    return minCover(std::move(masks), full);
}

std::optional<unsigned> minOneCover(const BooleanFunction& f) {
    const std::uint64_t full = fullMask(f.arity());
    std::vector<std::uint64_t> masks = f.falsePoints();
    if (masks.empty()) return std::nullopt;
    return minCover(std::move(masks), full);
}

bool preservesZero(const BooleanFunction& f) { return !f[0]; }
bool preservesOne(const BooleanFunction& f) { return f[f.tableSize() - 1]; }

bool isMonotone(const BooleanFunction& f) {
    const unsigned n = f.arity();
    for (std::uint64_t a = 0; a < f.tableSize(); ++a) {
        if (!f[a]) continue;
        for (unsigned i = 0; i < n; ++i)
            if (!f[a | (std::uint64_t{1} << i)]) return false;
    }
    return true;
}

bool isSelfDual(const BooleanFunction& f) {
    const std::uint64_t top = f.tableSize() - 1;
    for (std::uint64_t a = 0; a <= top / 2 + (top == 0); ++a)
        if (f[a] == f[a ^ top]) return false;
    return true;
}

bool isAffine(const BooleanFunction& f) {
    // f(a) = f(0) xor sum of c_i a_i with c_i = f(e_i) xor f(0).
    const unsigned n = f.arity();
    std::uint64_t c = 0;
    for (unsigned i = 0; i < n; ++i)
        if (f[std::uint64_t{1} << i] != f[0]) c |= std::uint64_t{1} << i;
    for (std::uint64_t a = 0; a < f.tableSize(); ++a)
        if (f[a] != (f[0] != static_cast<bool>(std::popcount(a & c) & 1))) return false;
    return true;
}

bool isSeparating1(const BooleanFunction& f, unsigned k) {
    if (k == kRankInfinity) {
        std::uint64_t v = fullMask(f.arity());
        bool any = false;
        for (auto t : f.truePoints()) {
            v &= t;
            any = true;
        }
        return !any || v != 0;
    }
    const auto c = minZeroCover(f);
    return !c || *c > k;
}

bool isSeparating0(const BooleanFunction& f, unsigned k) {
    if (k == kRankInfinity) {
        std::uint64_t v = 0;
        bool any = false;
        for (std::uint64_t a = 0; a < f.tableSize(); ++a)
            if (!f[a]) {
                v |= a;
                any = true;
            }
        return !any || v != fullMask(f.arity());
    }
    const auto c = minOneCover(f);
    return !c || *c > k;
}

bool contains(const CloneDescriptor& c, const BooleanFunction& f) { return containsByShape(c.shape, f); }

// -------------------------------------------------------------- arity parts

std::vector<BooleanFunction> allFunctions(unsigned m) {
    if (m == 0 || m > 4) throw DomainError("allFunctions: arity must lie in 1..4");
    const std::uint64_t count = std::uint64_t{1} << (1u << m);
    std::vector<BooleanFunction> out;
    out.reserve(count);
    for (std::uint64_t w = 0; w < count; ++w) out.push_back(BooleanFunction::fromWord(m, w));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Visits every r-tuple over [0, N) that has at least one index in [prev, N), once each.
template <class Visit>
void forEachNewTuple(unsigned r, std::size_t prev, std::size_t N, std::vector<std::size_t>& idx, Visit&& visit) {
    idx.assign(r, 0);
    std::vector<std::size_t> lo(r), hi(r);
    for (unsigned p = 0; p < r; ++p) {
        // p is the first position drawn from the new block.
        bool empty = false;
        for (unsigned q = 0; q < r; ++q) {
            lo[q] = q == p ? prev : 0;
            hi[q] = q < p ? prev : N;
            empty |= lo[q] >= hi[q];
        }
        if (empty) continue;
        idx = lo;
        while (true) {
            visit(idx);
            unsigned q = r;
            while (q > 0 && ++idx[q - 1] == hi[q - 1]) {
                idx[q - 1] = lo[q - 1];
                --q;
            }
            if (q == 0) break;
        }
    }
}

[[noreturn]] void closureBudget(std::uint64_t evals, std::uint64_t budget) {
    throw BudgetExceeded("closure", evals, budget, "lower the arity or the generator count");
}

} // namespace

std::vector<BooleanFunction> closeUnder(const std::vector<BooleanFunction>& start,
                                        const std::vector<BooleanFunction>& operations, std::uint64_t budget,
                                        std::uint64_t* evaluations) {
    if (start.empty()) return {};
    const unsigned m = start.front().arity();
    for (const auto& s : start)
        if (s.arity() != m) throw ArityMismatch("closeUnder: members must share one arity");
    std::vector<ComposePlan> plans;
    for (const auto& op : operations) plans.emplace_back(op);
    std::uint64_t evals = 0;
    std::vector<std::size_t> idx;
    std::vector<BooleanFunction> result;

    if (m <= 6) {
        const std::uint64_t mask = tailMask(m);
        std::vector<std::uint64_t> members;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& s : start)
            if (seen.insert(s.word0()).second) members.push_back(s.word0());
        std::vector<std::uint64_t> args;
        for (std::size_t prev = 0; prev < members.size();) {
            const std::size_t N = members.size();
            for (const auto& plan : plans) {
                args.resize(plan.arity());
                forEachNewTuple(plan.arity(), prev, N, idx, [&](const std::vector<std::size_t>& t) {
                    for (std::size_t q = 0; q < t.size(); ++q) args[q] = members[t[q]];
                    if (++evals > budget) closureBudget(evals, budget);
                    const std::uint64_t w = plan.applyWord(args.data(), mask);
                    if (seen.insert(w).second) members.push_back(w);
                });
            }
            prev = N;
        }
        result.reserve(members.size());
        for (auto w : members) result.push_back(BooleanFunction::fromWord(m, w));
    } else {
        const std::size_t W = wordCount(m);
        std::vector<std::vector<std::uint64_t>> members;
        std::unordered_set<BooleanFunction> seen;
        for (const auto& s : start)
            if (seen.insert(s).second) members.push_back(s.words());
        std::vector<std::uint64_t> out(W);
        std::vector<const std::uint64_t*> args;
        for (std::size_t prev = 0; prev < members.size();) {
            const std::size_t N = members.size();
            for (const auto& plan : plans) {
                args.resize(plan.arity());
                forEachNewTuple(plan.arity(), prev, N, idx, [&](const std::vector<std::size_t>& t) {
                    for (std::size_t q = 0; q < t.size(); ++q) args[q] = members[t[q]].data();
                    if (++evals > budget) closureBudget(evals, budget);
                    plan.apply(args.data(), W, ~std::uint64_t{0}, out.data());
                    if (seen.emplace(m, out).second) members.push_back(out);
                });
            }
            prev = N;
        }
        result.reserve(members.size());
        for (auto& w : members) result.emplace_back(m, std::move(w));
    }
    if (evaluations) *evaluations += evals;
    std::sort(result.begin(), result.end());
    return result;
}

FunctionSet arityPartByClosure(const CloneDescriptor& c, unsigned m, std::uint64_t budget) {
    checkArity(m, "arityPart");
    {
        std::lock_guard lock(g_cacheMutex);
        auto it = partCache().find(cacheKey(c, m, "closure"));
        if (it != partCache().end()) return it->second;
    }
    std::vector<BooleanFunction> proj;
    for (unsigned i = 1; i <= m; ++i) proj.push_back(BooleanFunction::projection(m, i));
    FunctionSet result(closeUnder(proj, c.generators, budget));
    std::lock_guard lock(g_cacheMutex);
    partCache().emplace(cacheKey(c, m, "closure"), result);
    return result;
}

FunctionSet arityPartByFilter(const CloneDescriptor& c, unsigned m, std::uint64_t budget) {
    checkArity(m, "arityPart");
    if (m > 4 || (std::uint64_t{1} << (1u << m)) > budget) {
        const std::uint64_t est = m >= 6 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << (1u << m);
        throw BudgetExceeded("predicate filter for " + c.id + " at arity " + std::to_string(m), est, budget,
                             "filter enumeration is limited to arity 4; use a generator-exact clone");
    }
    {
        std::lock_guard lock(g_cacheMutex);
        auto it = partCache().find(cacheKey(c, m, "filter"));
        if (it != partCache().end()) return it->second;
    }
    std::vector<BooleanFunction> out;
    for (auto& f : allFunctions(m))
        if (contains(c, f)) out.push_back(std::move(f));
    FunctionSet result(std::move(out));
    std::lock_guard lock(g_cacheMutex);
    partCache().emplace(cacheKey(c, m, "filter"), result);
    return result;
}

FunctionSet arityPart(const CloneDescriptor& c, unsigned m, std::uint64_t budget) {
    if (m == 0) throw DomainError("arityPart: arity must be positive");
    return c.generatorExact ? arityPartByClosure(c, m, budget) : arityPartByFilter(c, m, budget);
}

std::optional<std::uint64_t> arityPartSize(const CloneDescriptor& c, unsigned m) {
    static constexpr std::uint64_t dedekind[] = {2, 3, 6, 20, 168, 7581, 7828354, 2414682040998ULL};
    const std::uint64_t p = m < 64 ? std::uint64_t{1} << m : 0;
    if (c.generatorExact) {
        const auto& s = c.shape;
        switch (s.kind) {
        case Kind::EssentiallyUnary:
            return (s.allowNegation ? 2 * m : m) + (s.allowConst0 ? 1 : 0) + (s.allowConst1 ? 1 : 0);
        case Kind::Conjunctive:
        case Kind::Disjunctive:
            return p - 1 + (s.allowConst0 ? 1 : 0) + (s.allowConst1 ? 1 : 0);
        case Kind::Affine: {
            const unsigned constraints = (s.t0 ? 1 : 0) + (s.t1 ? 1 : 0) + (s.selfDual ? 1 : 0);
            // Lc: t0 and t1 force odd support, so only two independent constraints.
            const unsigned independent = std::min(constraints, 2u);
            return (p << 1) >> independent;
        }
        case Kind::General:
            if (s.monotone && !s.uRank && !s.wRank && m < 8)
                return dedekind[m] - (s.t0 ? 1 : 0) - (s.t1 ? 1 : 0);
            break;
        default: break;
        }
    }
    if (m <= 4) return arityPart(c, m, std::numeric_limits<std::uint64_t>::max()).size();
    return std::nullopt;
}

// ----------------------------------------------------------------- classify

PropertyRecord classify(const BooleanFunction& f, const Registry& reg) {
    PropertyRecord r;
    r.t0 = preservesZero(f);
    r.t1 = preservesOne(f);
    r.monotone = isMonotone(f);
    r.selfDual = isSelfDual(f);
    r.affine = isAffine(f);
    r.u2 = isSeparating1(f, 2);
    r.u3 = isSeparating1(f, 3);
    r.uInf = isSeparating1(f, kRankInfinity);
    r.w2 = isSeparating0(f, 2);
    r.w3 = isSeparating0(f, 3);
    r.wInf = isSeparating0(f, kRankInfinity);

    std::vector<const CloneDescriptor*> holding;
    for (const auto& c : reg.clones())
        if (contains(c, f)) holding.push_back(&c);
    std::vector<const CloneDescriptor*> minimal;
    for (const auto* c : holding) {
        bool isMin = true;
        for (const auto* d : holding)
            if (d != c && reg.isSubclone(d->id, c->id)) {
                isMin = false;
                break;
            }
        if (isMin) minimal.push_back(c);
    }
    if (minimal.size() != 1) {
        std::string names;
        for (const auto* c : minimal) names += " " + c->id;
        throw Error("classify: no unique least registry clone for " + format(f) + ":" + names);
    }
    r.minimalClone = minimal.front()->id;

    r.crossCheck = "skipped";
    if (f.arity() <= 3) {
        const auto& c = *minimal.front();
        bool agrees = true;
        for (unsigned m = 1; m <= 3 && agrees; ++m) {
            std::vector<BooleanFunction> proj;
            for (unsigned i = 1; i <= m; ++i) proj.push_back(BooleanFunction::projection(m, i));
            const FunctionSet generated(closeUnder(proj, {f}, kDefaultBudget));
            agrees = generated == arityPart(c, m);
        }
        r.crossCheck = agrees ? "agrees" : "differs";
    }
    return r;
}

CheckReport registrySelfTest(unsigned maxArity, const Registry& reg) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.checkId = "registry-self-test";
    for (const auto& c : reg.clones()) {
        if (!c.generatorExact) continue;
        rep.count("clonesChecked");
        for (unsigned m = 1; m <= maxArity; ++m) {
            const FunctionSet byClosure = arityPartByClosure(c, m);
            const FunctionSet byFilter = arityPartByFilter(c, m);
            rep.count("functionsCompared", static_cast<std::int64_t>(byFilter.size()));
            if (byClosure == byFilter) continue;
            for (const auto& f : byClosure.unite(byFilter)) {
                const bool inClosure = byClosure.contains(f), inFilter = byFilter.contains(f);
                if (inClosure != inFilter) {
                    rep.fail({{"clone", c.id},
                              {"arity", m},
                              {"function", format(f)},
                              {"inGeneratorClosure", inClosure},
                              {"satisfiesPredicate", inFilter}});
                    break;
                }
            }
            rep.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return rep;
        }
    }
    rep.wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace clonoid
