#include "clonoid/families.hpp"

#include <bit>
#include <functional>
#include <optional>

namespace clonoid {

namespace {

std::uint64_t lowMask(unsigned bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

unsigned popcount(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x)); }

bool valueAt(const BooleanFunction& phi, std::uint64_t idx) { return phi[idx]; }

BooleanFunction lift(unsigned arity, const char* where, const std::function<bool(std::uint64_t)>& pred) {
    checkArity(arity, where);
    return BooleanFunction::fromPredicate(arity, pred);
}

struct ComparablePair {
    std::uint64_t u = 0, v = 0;
};

// First pair u < v differing in one coordinate with f(u) = fu and f(v) = !fu.
std::optional<ComparablePair> coveringPair(const BooleanFunction& f, bool fu) {
    const unsigned n = f.arity();
    for (std::uint64_t u = 0; u < f.tableSize(); ++u) {
        if (f[u] != fu) continue;
        for (unsigned i = 1; i <= n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << (n - i);
            if (u & bit) continue;
            if (f[u | bit] != fu) return ComparablePair{u, u | bit};
        }
    }
    return std::nullopt;
}

AlphaBeta buildAlpha(const BooleanFunction& f, bool primed) {
    const unsigned n = f.arity();
    const auto pair = coveringPair(f, !primed);
    if (!pair) throw PreconditionError(primed ? "alphaBetaPrime: f is antitone" : "alphaBeta: f is monotone");
    AlphaBeta ab;
    ab.u = BitTuple(n, pair->u);
    ab.v = BitTuple(n, pair->v);
    ab.primed = primed;
    std::vector<BooleanFunction> inner;
    inner.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        if (ab.u.bit(i))
            inner.push_back(BooleanFunction::projection(2, 1));
        else if (ab.v.bit(i))
            inner.push_back(BooleanFunction::projection(2, 2));
        else
            inner.push_back(BooleanFunction::constant(2, false));
    }
    ab.alpha = compose(f, inner);
    return ab;
}

std::vector<BooleanFunction> projections(unsigned m) {
    std::vector<BooleanFunction> out;
    for (unsigned i = 1; i <= m; ++i) out.push_back(BooleanFunction::projection(m, i));
    return out;
}

std::vector<BooleanFunction> negatedProjections(unsigned m) {
    std::vector<BooleanFunction> out;
    for (unsigned i = 1; i <= m; ++i) out.push_back(BooleanFunction::negatedProjection(m, i));
    return out;
}

void subsetsRec(unsigned n, unsigned k, unsigned next, std::set<unsigned>& cur,
                std::vector<std::set<unsigned>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (unsigned i = next; i <= n; ++i) {
        cur.insert(i);
        subsetsRec(n, k, i + 1, cur, out);
        cur.erase(i);
    }
}

} // namespace

FamilyKind parseFamilyKind(const std::string& s) {
    if (s == "f") return FamilyKind::PippengerF;
    if (s == "q") return FamilyKind::PippengerQ;
    throw DomainError("unknown family '" + s + "' (expected f or q)");
}

std::string toString(FamilyKind k) { return k == FamilyKind::PippengerF ? "f" : "q"; }

BooleanFunction pippengerF(unsigned n) {
    if (n < 3) throw DomainError("pippengerF: n must be at least 3");
    checkArity(n, "pippengerF");
    return BooleanFunction::fromPredicate(n, [n](std::uint64_t a) {
        const unsigned w = popcount(a);
        return w == 1 || w == n - 1;
    });
}

BooleanFunction pippengerQ(unsigned n) {
    if (n < 3) throw DomainError("pippengerQ: n must be at least 3");
    checkArity(n, "pippengerQ");
    return BooleanFunction::fromPredicate(n, [n](std::uint64_t a) {
        const unsigned w = popcount(a);
        return w == 1 || w == n;
    });
}

BooleanFunction family(FamilyKind k, unsigned n) {
    return k == FamilyKind::PippengerF ? pippengerF(n) : pippengerQ(n);
}

BooleanFunction witnessM(const BooleanFunction& phi) {
    return lift(phi.arity() + 2, "witnessM", [&](std::uint64_t idx) {
        const bool c = (idx >> 1) & 1u, d = idx & 1u;
        if (!c) return false;
        return d || valueAt(phi, idx >> 2);
    });
}

BooleanFunction witnessMneg(const BooleanFunction& phi) {
    const std::uint64_t mask = lowMask(phi.arity());
    return lift(phi.arity() + 2, "witnessMneg", [&](std::uint64_t idx) {
        const bool c = (idx >> 1) & 1u, d = idx & 1u;
        if (!c) return false;
        return d || valueAt(phi, ~(idx >> 2) & mask);
    });
}

BooleanFunction witnessAll(const BooleanFunction& phi) {
    const unsigned n = phi.arity();
    const std::uint64_t mask = lowMask(n);
    return lift(2 * n + 2, "witnessAll", [&](std::uint64_t idx) {
        const bool c = (idx >> 1) & 1u, d = idx & 1u;
        const std::uint64_t b = (idx >> 2) & mask, a = idx >> (n + 2);
        if (!c) return false;
        if (d || popcount(a) + popcount(b) > n) return true;
        return (a ^ b) == mask && valueAt(phi, a);
    });
}

BooleanFunction phiM(const BooleanFunction& phi) {
    return lift(phi.arity() + 1, "phiM",
                [&](std::uint64_t idx) { return (idx & 1u) && valueAt(phi, idx >> 1); });
}

BooleanFunction phiMneg(const BooleanFunction& phi) {
    const std::uint64_t mask = lowMask(phi.arity());
    return lift(phi.arity() + 1, "phiMneg",
                [&](std::uint64_t idx) { return (idx & 1u) && valueAt(phi, ~(idx >> 1) & mask); });
}

BooleanFunction witnessOX(const BooleanFunction& phi) {
    const unsigned m = phi.arity();
    const std::uint64_t mask = lowMask(m);
    return lift(2 * m + 1, "witnessOX", [&](std::uint64_t idx) {
        if (!(idx & 1u)) return false;
        const std::uint64_t b = (idx >> 1) & mask, a = idx >> (m + 1);
        if (b == (~a & mask)) return valueAt(phi, a);
        return popcount(a) + popcount(b) > m;
    });
}

std::vector<BooleanFunction> recipeM(unsigned m) {
    auto out = projections(m);
    out.push_back(BooleanFunction::constant(m, true));
    out.push_back(BooleanFunction::constant(m, false));
    return out;
}

std::vector<BooleanFunction> recipeMneg(unsigned m) {
    auto out = negatedProjections(m);
    out.push_back(BooleanFunction::constant(m, true));
    out.push_back(BooleanFunction::constant(m, false));
    return out;
}

std::vector<BooleanFunction> recipeAll(unsigned n) {
    auto out = projections(n);
    for (auto& g : negatedProjections(n)) out.push_back(std::move(g));
    out.push_back(BooleanFunction::constant(n, true));
    out.push_back(BooleanFunction::constant(n, false));
    return out;
}

BooleanFunction AlphaBeta::beta(unsigned m, unsigned i) const {
    return compose(alpha, {BooleanFunction::disjunction(m), BooleanFunction::projection(m, i)});
}

std::vector<BooleanFunction> AlphaBeta::betas(unsigned m) const {
    std::vector<BooleanFunction> out;
    for (unsigned i = 1; i <= m; ++i) out.push_back(beta(m, i));
    return out;
}

AlphaBeta alphaBeta(const BooleanFunction& f) {
    if (f[0]) throw PreconditionError("alphaBeta: f does not preserve 0");
    return buildAlpha(f, false);
}

AlphaBeta alphaBetaPrime(const BooleanFunction& f) {
    if (!f[0]) throw PreconditionError("alphaBetaPrime: f(0) must be 1");
    return buildAlpha(f, true);
}

std::vector<BooleanFunction> recipeOX(const AlphaBeta& ab, unsigned m) {
    auto out = projections(m);
    for (auto& g : ab.betas(m)) out.push_back(std::move(g));
    out.push_back(BooleanFunction::disjunction(m));
    return out;
}

std::vector<BooleanFunction> recipeIX(const AlphaBeta& ab, unsigned m) {
    auto out = ab.betas(m);
    for (auto& g : negatedProjections(m)) out.push_back(std::move(g));
    out.push_back(BooleanFunction::constant(m, true));
    return out;
}

std::vector<BooleanFunction> recipeOXAll(unsigned m) {
    auto out = projections(m);
    for (auto& g : negatedProjections(m)) out.push_back(std::move(g));
    out.push_back(BooleanFunction::constant(m, true));
    return out;
}

std::vector<BooleanFunction> projectionRecipe(const BooleanFunction& f, unsigned m, unsigned i, bool negated) {
    if (i == 0 || i > m) throw DomainError("projectionRecipe: index out of range");
    const auto pair = coveringPair(f, negated);
    if (!pair)
        throw PreconditionError(negated ? "projectionRecipe: f is monotone" : "projectionRecipe: f is antitone");
    const unsigned n = f.arity();
    const BitTuple a(n, pair->u), b(n, pair->v);
    std::vector<BooleanFunction> inner;
    for (unsigned k = 1; k <= n; ++k) {
        if (a.bit(k) == b.bit(k))
            inner.push_back(BooleanFunction::constant(m, a.bit(k)));
        else
            inner.push_back(BooleanFunction::projection(m, i));
    }
    return inner;
}

std::vector<std::set<unsigned>> subsetsOfSize(unsigned n, unsigned k) {
    std::vector<std::set<unsigned>> out;
    std::set<unsigned> cur;
    subsetsRec(n, k, 1, cur, out);
    return out;
}

std::vector<BooleanFunction> buildGS(unsigned n, const std::set<unsigned>& S) {
    if (n < 5) throw DomainError("buildGS: n must be at least 5");
    const unsigned N = n + 2;
    checkArity(N, "buildGS");
    if (S.size() != 3 || *S.begin() < 1 || *S.rbegin() > N)
        throw DomainError("buildGS: S must be a 3-subset of 1..n+2");
    std::vector<BooleanFunction> gs;
    for (unsigned i = 1; i <= N; ++i)
        if (!S.count(i)) gs.push_back(BooleanFunction::projection(N, i));
    std::uint64_t sMask = 0;
    for (unsigned i : S) sMask |= std::uint64_t{1} << (N - i);
    gs.push_back(BooleanFunction::fromPredicate(N, [sMask](std::uint64_t a) { return popcount(a & sMask) & 1u; }));
    return gs;
}

BooleanFunction buildTheta(const BooleanFunction& phi) {
    const unsigned n = phi.arity();
    BooleanFunction theta = BooleanFunction::constant(n + 2, true);
    for (const auto& S : subsetsOfSize(n + 2, 3)) theta = meet(theta, compose(phi, buildGS(n, S)));
    return theta;
}

BooleanFunction buildTheta(FamilyKind k, unsigned n) { return buildTheta(family(k, n)); }

} // namespace clonoid
