#include "clonoid/engine.hpp"
#include "clonoid/kernels.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace clonoid {

namespace {

using Kind = CloneShape::Kind;
using Bits = std::vector<std::uint64_t>;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t satAdd(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t satPow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = satMul(r, base);
    return r;
}

bool bitsZero(const Bits& x) {
    return std::all_of(x.begin(), x.end(), [](std::uint64_t w) { return w == 0; });
}

bool bitsLeq(const Bits& x, const Bits& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] & ~y[i]) return false;
    return true;
}

Bits bitsComplement(const Bits& x, std::size_t L) {
    Bits c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = ~x[i];
    if (L % 64) c.back() &= (std::uint64_t{1} << (L % 64)) - 1;
    return c;
}

Bits bitsOnes(std::size_t L) { return bitsComplement(Bits((L + 63) / 64, 0), L); }

// Row-reduced GF(2) span of bit vectors with an explicit pivot per row.
class Gf2Span {
public:
    void add(Bits v) {
        reduce(v);
        const auto p = pivot(v);
        if (p) rows_.emplace_back(*p, std::move(v));
    }
    bool spans(Bits v) const {
        reduce(v);
        return bitsZero(v);
    }

private:
    static std::optional<std::size_t> pivot(const Bits& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(v[i]));
        return std::nullopt;
    }
    void reduce(Bits& v) const {
        for (const auto& [p, row] : rows_)
            if ((v[p / 64] >> (p % 64)) & 1u)
                for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= row[i];
    }
    std::vector<std::pair<std::size_t, Bits>> rows_;
};

} // namespace

std::string toString(Verdict v) {
    switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

// ------------------------------------------------------------ extension oracle

struct ExtensionOracle::Impl {
    CloneShape shape;
    unsigned m = 0;
    std::vector<BooleanFunction> inner;
    std::unordered_set<BooleanFunction> innerSet;

    // Affine shape.
    Gf2Span span;
    std::size_t tableBits = 0;

    // Self-dual and general shapes: points of the extended image E = P ∪ complements ∪ {0, 1}.
    std::size_t L = 0;
    std::vector<Bits> points;
    std::size_t imageCount = 0;       // the first imageCount entries of `points` form P
    std::vector<std::size_t> classOf; // tuple index -> entry of P
    std::vector<std::size_t> complementOf;
    std::size_t zero = 0, ones = 0;
    std::vector<std::vector<bool>> leq;

    std::size_t intern(std::map<Bits, std::size_t>& index, Bits b) {
        auto [it, fresh] = index.emplace(b, points.size());
        if (fresh) points.push_back(std::move(b));
        return it->second;
    }

    void buildImage() {
        L = inner.size();
        const std::size_t words = (L + 63) / 64;
        const std::uint64_t T = std::uint64_t{1} << m;
        std::map<Bits, std::size_t> index;
        classOf.resize(T);
        for (std::uint64_t a = 0; a < T; ++a) {
            Bits col(words, 0);
            for (std::size_t i = 0; i < L; ++i)
                if (inner[i][a]) col[i / 64] |= std::uint64_t{1} << (i % 64);
            classOf[a] = intern(index, std::move(col));
        }
        imageCount = points.size();
        for (std::size_t i = 0; i < imageCount; ++i) intern(index, bitsComplement(points[i], L));
        zero = intern(index, Bits(words, 0));
        ones = intern(index, bitsOnes(L));
        complementOf.resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) complementOf[i] = intern(index, bitsComplement(points[i], L));
        const std::size_t E = points.size();
        leq.assign(E, std::vector<bool>(E, false));
        for (std::size_t i = 0; i < E; ++i)
            for (std::size_t j = 0; j < E; ++j) leq[i][j] = bitsLeq(points[i], points[j]);
    }

    void buildAffine() {
        tableBits = std::size_t{1} << m;
        const std::size_t words = (tableBits + 1 + 63) / 64;
        const bool parity = shape.t1 || shape.selfDual;
        auto vec = [&](const BooleanFunction& g, bool extra) {
            Bits v(words, 0);
            for (std::size_t i = 0; i < g.words().size(); ++i) v[i] = g.words()[i];
            if (extra) v[tableBits / 64] |= std::uint64_t{1} << (tableBits % 64);
            return v;
        };
        for (const auto& g : inner) span.add(vec(g, parity));
        if (!shape.t0) span.add(vec(BooleanFunction::constant(m, true), shape.t1));
    }

    Bits affineTarget(const BooleanFunction& f) const {
        const std::size_t words = (tableBits + 1 + 63) / 64;
        Bits v(words, 0);
        for (std::size_t i = 0; i < f.words().size(); ++i) v[i] = f.words()[i];
        if (shape.t1 || shape.selfDual) v[tableBits / 64] |= std::uint64_t{1} << (tableBits % 64);
        return v;
    }

    // Values on E induced by f and the clone's constant constraints; false on a conflict.
    bool assign(const BooleanFunction& f, std::vector<signed char>& val) const {
        val.assign(points.size(), -1);
        auto put = [&](std::size_t e, bool v) {
            if (val[e] >= 0 && val[e] != static_cast<signed char>(v)) return false;
            val[e] = static_cast<signed char>(v);
            return true;
        };
        for (std::uint64_t a = 0; a < classOf.size(); ++a)
            if (!put(classOf[a], f[a])) return false;
        if (shape.t0 && !put(zero, false)) return false;
        if (shape.t1 && !put(ones, true)) return false;
        if (shape.kind == Kind::SelfDual) {
            for (std::size_t e = 0; e < points.size(); ++e)
                if (val[e] >= 0 && !put(complementOf[e], !val[e])) return false;
        }
        return true;
    }

    bool monotoneConsistent(const std::vector<signed char>& val) const {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (val[i] != 1) continue;
            for (std::size_t j = 0; j < points.size(); ++j)
                if (val[j] == 0 && leq[i][j]) return false;
        }
        return true;
    }

    // Every subset of `chosen` with at most k members has a nonzero meet (or a join below all-ones when dual).
    bool separated(const std::vector<std::size_t>& chosen, unsigned k, bool dual) const {
        const std::size_t words = (L + 63) / 64;
        const Bits full = bitsOnes(L);
        auto fails = [&](const Bits& acc) {
            if (!dual) return bitsZero(acc);
            for (std::size_t i = 0; i < words; ++i)
                if (acc[i] != full[i]) return false;
            return true;
        };
        auto combine = [&](Bits& acc, const Bits& x) {
            for (std::size_t i = 0; i < words; ++i) acc[i] = dual ? (acc[i] | x[i]) : (acc[i] & x[i]);
        };
        if (k == kRankInfinity || k >= chosen.size()) {
            if (chosen.empty()) return true;
            Bits acc = points[chosen[0]];
            for (std::size_t i = 1; i < chosen.size(); ++i) combine(acc, points[chosen[i]]);
            return !fails(acc);
        }
        // Depth-first search over subsets of size <= k with a running meet or join.
        std::vector<Bits> stack(k + 1, Bits(words));
        stack[0] = dual ? Bits(words, 0) : full;
        std::function<bool(std::size_t, unsigned)> dfs = [&](std::size_t start, unsigned depth) {
            for (std::size_t i = start; i < chosen.size(); ++i) {
                stack[depth + 1] = stack[depth];
                combine(stack[depth + 1], points[chosen[i]]);
                if (fails(stack[depth + 1])) return false;
                if (depth + 1 < k && !dfs(i + 1, depth + 1)) return false;
            }
            return true;
        };
        return dfs(0, 0);
    }

    bool contains(const BooleanFunction& f) const {
        switch (shape.kind) {
        case Kind::EssentiallyUnary:
            if (f.isConstant(false) && shape.allowConst0) return true;
            if (f.isConstant(true) && shape.allowConst1) return true;
            if (shape.allowProjection && innerSet.count(f)) return true;
            return shape.allowNegation && innerSet.count(negate(f));
        case Kind::Conjunctive:
        case Kind::Disjunctive: {
            if (f.isConstant(false) && shape.allowConst0) return true;
            if (f.isConstant(true) && shape.allowConst1) return true;
            const bool conj = shape.kind == Kind::Conjunctive;
            std::optional<BooleanFunction> acc;
            for (const auto& g : inner) {
                if (conj ? !isMinorant(f, g) : !isMinorant(g, f)) continue;
                acc = acc ? (conj ? meet(*acc, g) : join(*acc, g)) : g;
            }
            return acc && *acc == f;
        }
        case Kind::Affine: return span.spans(affineTarget(f));
        case Kind::SelfDual: {
            std::vector<signed char> val;
            if (!assign(f, val)) return false;
            return !shape.monotone || monotoneConsistent(val);
        }
        case Kind::General: {
            std::vector<signed char> val;
            if (!assign(f, val)) return false;
            if (shape.monotone && !monotoneConsistent(val)) return false;
            if (shape.uRank) {
                std::vector<std::size_t> trues;
                for (std::size_t e = 0; e < val.size(); ++e)
                    if (val[e] == 1) trues.push_back(e);
                if (!separated(trues, shape.uRank, false)) return false;
            }
            if (shape.wRank) {
                std::vector<std::size_t> falses;
                for (std::size_t e = 0; e < val.size(); ++e)
                    if (val[e] == 0) falses.push_back(e);
                if (!separated(falses, shape.wRank, true)) return false;
            }
            return true;
        }
        }
        return false;
    }
};

ExtensionOracle::ExtensionOracle(const CloneDescriptor& target, std::vector<BooleanFunction> inner)
    : impl_(std::make_unique<Impl>()) {
    impl_->shape = target.shape;
    if (target.shape.uRank && target.shape.wRank)
        throw PreconditionError("extension oracle: clones separating on both sides are not supported");
    if (!inner.empty()) {
        arity_ = inner.front().arity();
        for (const auto& g : inner)
            if (g.arity() != arity_) throw ArityMismatch("extension oracle: inner functions must share one arity");
    }
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    impl_->m = arity_;
    impl_->inner = std::move(inner);
    impl_->innerSet.insert(impl_->inner.begin(), impl_->inner.end());
    if (impl_->inner.empty()) return;
    const Kind k = target.shape.kind;
    if (k == Kind::Affine) impl_->buildAffine();
    if (k == Kind::SelfDual || k == Kind::General) {
        if (arity_ > 10) throw DomainError("extension oracle: arity above 10 is not supported for " + target.id);
        impl_->buildImage();
    }
}

ExtensionOracle::~ExtensionOracle() = default;
ExtensionOracle::ExtensionOracle(ExtensionOracle&&) noexcept = default;
ExtensionOracle& ExtensionOracle::operator=(ExtensionOracle&&) noexcept = default;

bool ExtensionOracle::contains(const BooleanFunction& f) const {
    if (impl_->inner.empty()) return false;
    if (f.arity() != arity_) throw ArityMismatch("extension oracle: arity of the query differs from the inner set");
    return impl_->contains(f);
}

std::size_t ExtensionOracle::imagePoints() const noexcept { return impl_->imageCount; }

// ------------------------------------------------------------ right composition

namespace {

std::uint64_t rightCost(const FunctionSet& F, std::uint64_t innerSize) {
    std::uint64_t cost = 0;
    for (const auto& f : F) cost = satAdd(cost, satPow(innerSize, f.arity()));
    return cost;
}

std::vector<std::uint64_t> wordsOf(const FunctionSet& s) {
    std::vector<std::uint64_t> w;
    w.reserve(s.size());
    for (const auto& f : s) w.push_back(f.word0());
    return w;
}

// Multi-word right composition for m > 6: plain enumeration.
void composeWide(const BooleanFunction& f, const FunctionSet& inner, unsigned m,
                 std::unordered_set<BooleanFunction>& out, std::uint64_t& evals) {
    const unsigned n = f.arity();
    const std::size_t N = inner.size();
    if (N == 0) return;
    const ComposePlan plan(f);
    const std::size_t W = wordCount(m);
    std::vector<std::size_t> idx(n, 0);
    std::vector<const std::uint64_t*> args(n);
    std::vector<std::uint64_t> res(W);
    const auto& mem = inner.members();
    while (true) {
        for (unsigned i = 0; i < n; ++i) args[i] = mem[idx[i]].words().data();
        plan.apply(args.data(), W, ~std::uint64_t{0}, res.data());
        ++evals;
        out.emplace(m, res);
        unsigned q = n;
        while (q > 0 && ++idx[q - 1] == N) idx[--q] = 0;
        if (q == 0) break;
    }
}

FunctionSet rightComposeImpl(const FunctionSet& F, const CloneDescriptor& C1, unsigned m, std::uint64_t budget,
                             std::uint64_t* evaluations, bool reference) {
    checkArity(m, "rightCompose");
    if (F.empty()) return FunctionSet();
    const auto size = arityPartSize(C1, m);
    const std::uint64_t estimate = size ? rightCost(F, *size) : kSaturated;
    if (estimate > budget)
        throw BudgetExceeded("right composition with " + C1.id + " at arity " + std::to_string(m), estimate, budget,
                             "lower the output arity or choose a smaller source clone");
    const FunctionSet inner = arityPart(C1, m, budget);
    std::uint64_t evals = 0;
    std::vector<BooleanFunction> out;
    if (m <= 6) {
        const auto words = wordsOf(inner);
        std::vector<std::uint64_t> all;
        for (const auto& f : F) {
            const CompositeScan scan =
                reference ? scanCompositesSerial(f, words, m) : scanCompositesParallel(f, words, m);
            evals += scan.evaluations;
            all.insert(all.end(), scan.composites.begin(), scan.composites.end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        out.reserve(all.size());
        for (auto w : all) out.push_back(BooleanFunction::fromWord(m, w));
    } else {
        std::unordered_set<BooleanFunction> seen;
        for (const auto& f : F) composeWide(f, inner, m, seen, evals);
        out.assign(seen.begin(), seen.end());
    }
    if (evaluations) *evaluations += evals;
    return FunctionSet(std::move(out));
}

} // namespace

FunctionSet rightCompose(const FunctionSet& F, const CloneDescriptor& C1, unsigned m, std::uint64_t budget,
                         std::uint64_t* evaluations) {
    return rightComposeImpl(F, C1, m, budget, evaluations, false);
}

FunctionSet rightComposeReference(const FunctionSet& F, const CloneDescriptor& C1, unsigned m,
                                  std::uint64_t budget) {
    return rightComposeImpl(F, C1, m, budget, nullptr, true);
}

// ------------------------------------------------------------ left closure

FunctionSet leftClose(const FunctionSet& G, const CloneDescriptor& C2, LeftStrategy strategy, unsigned probeArity,
                      std::uint64_t budget, std::uint64_t* evaluations) {
    if (G.empty()) return FunctionSet();
    const auto arities = G.arities();
    if (arities.size() != 1) throw ArityMismatch("leftClose: all members must share one arity");
    const unsigned m = arities.front();

    if (strategy == LeftStrategy::Auto) {
        if (C2.generatorExact)
            strategy = LeftStrategy::Generators;
        else if (m <= 4)
            strategy = LeftStrategy::ExtensionFilter;
        else
            strategy = LeftStrategy::BoundedFixpoint;
    }

    switch (strategy) {
    case LeftStrategy::Generators: {
        FunctionSet out(closeUnder(G.members(), C2.generators, budget, evaluations));
        if (!C2.generatorExact) out.setProvenance(Provenance::LeftClosureApproximate);
        return out;
    }
    case LeftStrategy::ExtensionFilter: {
        const std::uint64_t cost = m <= 4 ? (std::uint64_t{1} << (1u << m)) : kSaturated;
        if (m > 4 || cost > budget)
            throw BudgetExceeded("extension filter for " + C2.id + " at arity " + std::to_string(m), cost, budget,
                                 "use the bounded fixpoint strategy above arity 4");
        const ExtensionOracle oracle(C2, G.members());
        std::vector<BooleanFunction> out;
        for (auto& f : allFunctions(m))
            if (oracle.contains(f)) out.push_back(std::move(f));
        if (evaluations) *evaluations += cost;
        return FunctionSet(std::move(out));
    }
    case LeftStrategy::BoundedFixpoint: {
        if (probeArity == 0 || probeArity > 4) throw DomainError("leftClose: probe arity must lie in 1..4");
        std::vector<BooleanFunction> ops;
        unsigned maxGen = 0;
        for (const auto& g : C2.generators) maxGen = std::max(maxGen, g.arity());
        for (unsigned l = 1; l <= probeArity; ++l)
            for (const auto& phi : arityPartByFilter(C2, l, budget)) {
                bool projection = false;
                for (unsigned i = 1; i <= l; ++i) projection |= phi == BooleanFunction::projection(l, i);
                if (!projection) ops.push_back(phi);
            }
        FunctionSet out(closeUnder(G.members(), ops, budget, evaluations));
        const bool exact = C2.generatorExact && probeArity >= maxGen;
        if (!exact) out.setProvenance(Provenance::LeftClosureApproximate);
        return out;
    }
    case LeftStrategy::Auto: break;
    }
    return FunctionSet();
}

// ------------------------------------------------------------ generation and membership

std::uint64_t estimateCost(const GenerationRequest& req, const Registry& reg) {
    const auto& c1 = reg.get(req.sourceClone);
    const auto size = arityPartSize(c1, req.outputArity);
    if (!size) return kSaturated;
    return satMul(satPow(*size, req.generators.maxArity()), req.generators.size());
}

FunctionSet generateClonoid(const GenerationRequest& req, const Registry& reg) {
    if (req.outputArity == 0) throw DomainError("generateClonoid: output arity must be positive");
    if (req.budget == 0) throw DomainError("generateClonoid: budget must be positive");
    const auto& c1 = reg.get(req.sourceClone);
    const auto& c2 = reg.get(req.targetClone);
    const std::uint64_t cost = estimateCost(req, reg);
    if (cost > req.budget)
        throw BudgetExceeded("generation", cost, req.budget, "lower the output arity or raise --budget");
    const FunctionSet right = rightCompose(req.generators, c1, req.outputArity, req.budget);
    return leftClose(right, c2, req.strategy, req.probeArity, req.budget);
}

Verdict isClonoidMember(const BooleanFunction& f, const FunctionSet& F, const CloneDescriptor& C1,
                        const CloneDescriptor& C2, std::uint64_t budget, LeftStrategy strategy) {
    const FunctionSet G = rightCompose(F, C1, f.arity(), budget);
    if (strategy == LeftStrategy::Auto || strategy == LeftStrategy::ExtensionFilter) {
        if (G.empty()) return Verdict::False;
        return ExtensionOracle(C2, G.members()).contains(f) ? Verdict::True : Verdict::False;
    }
    const FunctionSet closed = leftClose(G, C2, strategy, 3, budget);
    if (closed.contains(f)) return Verdict::True;
    return closed.isExact() ? Verdict::False : Verdict::Indeterminate;
}

// ------------------------------------------------------------ transforms

FunctionSet transformSet(const FunctionSet& K, TransformKind kind) {
    std::vector<BooleanFunction> out;
    auto addConstants = [&](bool v) {
        for (unsigned n : K.arities()) out.push_back(BooleanFunction::constant(n, v));
    };
    for (const auto& f : K) {
        switch (kind) {
        case TransformKind::Negate: out.push_back(negate(f)); break;
        case TransformKind::InnerNegate: out.push_back(innerNegate(f)); break;
        case TransformKind::Dual: out.push_back(dual(f)); break;
        case TransformKind::UnionNegations:
            out.push_back(f);
            out.push_back(negate(f));
            break;
        default: out.push_back(f); break;
        }
    }
    if (kind == TransformKind::UnionConst0 || kind == TransformKind::UnionConstBoth) addConstants(false);
    if (kind == TransformKind::UnionConst1 || kind == TransformKind::UnionConstBoth) addConstants(true);
    return FunctionSet(std::move(out), K.provenance());
}

// ------------------------------------------------------------ function classes

FunctionClass FunctionClass::fromPredicate(std::string name, std::function<bool(const BooleanFunction&)> pred) {
    FunctionClass k;
    k.name_ = std::move(name);
    k.pred_ = std::move(pred);
    return k;
}

FunctionClass FunctionClass::fromSet(std::string name, FunctionSet members) {
    FunctionClass k;
    k.name_ = std::move(name);
    k.set_ = std::make_shared<const FunctionSet>(std::move(members));
    return k;
}

FunctionClass FunctionClass::fromClone(const CloneDescriptor& c) {
    return fromPredicate(c.id, [c](const BooleanFunction& f) { return clonoid::contains(c, f); });
}

bool FunctionClass::contains(const BooleanFunction& f) const { return set_ ? set_->contains(f) : pred_(f); }

std::vector<BooleanFunction> FunctionClass::members(unsigned n) const {
    if (set_) return set_->ofArity(n);
    std::vector<BooleanFunction> out;
    for (auto& f : allFunctions(n))
        if (pred_(f)) out.push_back(std::move(f));
    return out;
}

// ------------------------------------------------------------ stability

namespace {

// Membership of one-word tables of a fixed arity, memoized.
class MembershipCache {
public:
    MembershipCache(const FunctionClass& K, unsigned k) : K_(K), k_(k) {
        if (k <= 4) {
            const std::uint64_t count = std::uint64_t{1} << (1u << k);
            known_.assign(count, -1);
        }
    }
    bool operator()(std::uint64_t w) {
        if (!known_.empty()) {
            auto& slot = known_[w];
            if (slot < 0) slot = K_.contains(BooleanFunction::fromWord(k_, w)) ? 1 : 0;
            return slot == 1;
        }
        auto it = memo_.find(w);
        if (it == memo_.end()) it = memo_.emplace(w, K_.contains(BooleanFunction::fromWord(k_, w))).first;
        return it->second;
    }

private:
    const FunctionClass& K_;
    unsigned k_;
    std::vector<signed char> known_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

bool canonicalUnderPermutation(const BooleanFunction& phi) {
    const unsigned l = phi.arity();
    if (l < 2) return true;
    std::vector<unsigned> perm(l);
    std::iota(perm.begin(), perm.end(), 0u);
    while (std::next_permutation(perm.begin(), perm.end())) {
        BooleanFunction g(l);
        for (std::uint64_t a = 0; a < phi.tableSize(); ++a) {
            std::uint64_t b = 0;
            for (unsigned i = 0; i < l; ++i)
                if ((a >> (l - 1 - perm[i])) & 1u) b |= std::uint64_t{1} << (l - 1 - i);
            if (phi[b]) g.set(a, true);
        }
        if (g < phi) return false;
    }
    return true;
}

nlohmann::json violation(const char* side, const BooleanFunction& outer, const std::vector<std::uint64_t>& pool,
                         unsigned k, std::uint64_t composite) {
    nlohmann::json cex{{"side", side}, {"outer", format(outer)},
                       {"composite", format(BooleanFunction::fromWord(k, composite))}};
    if (auto t = findInnerTuple(outer, pool, k, composite)) {
        nlohmann::json inner = nlohmann::json::array();
        for (auto i : *t) inner.push_back(format(BooleanFunction::fromWord(k, pool[i])));
        cex["inner"] = inner;
    }
    return cex;
}

void mergeInto(CheckReport& into, const CheckReport& part, const std::string& prefix) {
    for (const auto& [key, v] : part.statistics) into.count(prefix + key, v);
    if (part.status == CheckStatus::Fail && into.status != CheckStatus::Fail) into.fail(part.counterexample);
    into.notes.insert(into.notes.end(), part.notes.begin(), part.notes.end());
}

} // namespace

StabilityBounds StabilityBounds::uniform(unsigned m, unsigned p) {
    StabilityBounds b;
    for (unsigned k = 1; k <= m; ++k) {
        b.right.emplace_back(m, k);
        b.left.emplace_back(p, k);
    }
    return b;
}

CheckReport isRightStable(const FunctionClass& K, const CloneDescriptor& C1,
                          const std::vector<std::pair<unsigned, unsigned>>& bounds) {
    CheckReport rep;
    rep.checkId = "right-stability";
    std::set<std::pair<unsigned, unsigned>> done;
    for (const auto& [outerBound, k] : bounds) {
        if (k > 6) throw DomainError("isStable: inner arity above 6 is not supported");
        const auto pool = wordsOf(arityPart(C1, k));
        MembershipCache inK(K, k);
        for (unsigned n = 1; n <= outerBound; ++n) {
            if (!done.insert({n, k}).second) continue;
            for (const auto& f : K.members(n)) {
                const CompositeScan scan = scanCompositesParallel(f, pool, k);
                rep.count("compositions", static_cast<std::int64_t>(scan.evaluations));
                rep.count("assignmentsCovered", static_cast<std::int64_t>(scan.assignmentsCovered));
                for (auto w : scan.composites)
                    if (!inK(w)) {
                        rep.fail(violation("right", f, pool, k, w));
                        return rep;
                    }
            }
        }
    }
    return rep;
}

CheckReport isLeftStable(const FunctionClass& K, const CloneDescriptor& C2,
                         const std::vector<std::pair<unsigned, unsigned>>& bounds) {
    CheckReport rep;
    rep.checkId = "left-stability";
    std::set<std::pair<unsigned, unsigned>> done;
    for (const auto& [outerBound, k] : bounds) {
        if (k > 6) throw DomainError("isStable: inner arity above 6 is not supported");
        std::vector<std::uint64_t> pool;
        for (const auto& g : K.members(k)) pool.push_back(g.word0());
        MembershipCache inK(K, k);
        for (unsigned l = 1; l <= outerBound; ++l) {
            if (!done.insert({l, k}).second) continue;
            for (const auto& phi : arityPart(C2, l)) {
                // Minors of phi are in C2 and are visited at their own arity.
                if (phi.isConstant() ? l > 1 : essentialCore(phi).arity() < l) continue;
                if (!canonicalUnderPermutation(phi)) continue;
                const CompositeScan scan = scanCompositesParallel(phi, pool, k);
                rep.count("compositions", static_cast<std::int64_t>(scan.evaluations));
                rep.count("assignmentsCovered", static_cast<std::int64_t>(scan.assignmentsCovered));
                for (auto w : scan.composites)
                    if (!inK(w)) {
                        rep.fail(violation("left", phi, pool, k, w));
                        return rep;
                    }
            }
        }
    }
    return rep;
}

CheckReport isStable(const FunctionClass& K, const CloneDescriptor& C1, const CloneDescriptor& C2,
                     const StabilityBounds& bounds) {
    CheckReport rep;
    rep.checkId = "stability:" + K.name();
    mergeInto(rep, isRightStable(K, C1, bounds.right), "right.");
    if (rep.status != CheckStatus::Fail) mergeInto(rep, isLeftStable(K, C2, bounds.left), "left.");
    return rep;
}

CheckReport isStable(const FunctionClass& K, const CloneDescriptor& C1, const CloneDescriptor& C2, unsigned m,
                     unsigned p) {
    return isStable(K, C1, C2, StabilityBounds::uniform(m, p));
}

} // namespace clonoid
