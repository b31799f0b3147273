#include "clonoid/kernels.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#ifdef CLONOID_HAVE_OPENMP
#include <omp.h>
#endif

namespace clonoid {

namespace {

std::uint64_t saturatingPow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

BooleanFunction swapArguments(const BooleanFunction& f, unsigned i, unsigned j) {
    const unsigned n = f.arity();
    const unsigned bi = n - 1 - i, bj = n - 1 - j;
    BooleanFunction g(n);
    for (std::uint64_t a = 0; a < f.tableSize(); ++a) {
        const std::uint64_t x = ((a >> bi) ^ (a >> bj)) & 1u;
        const std::uint64_t b = a ^ ((x << bi) | (x << bj));
        if (f[b]) g.set(a, true);
    }
    return g;
}

void checkInner(const std::vector<std::uint64_t>& inner, unsigned m) {
    if (m == 0 || m > 6) throw DomainError("composition kernel: inner arity must lie in 1..6");
    const std::uint64_t mask = tailMask(m);
    for (auto w : inner)
        if (w & ~mask) throw DomainError("composition kernel: inner table has bits beyond its arity");
}

std::vector<std::uint64_t> sortedUnique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Odometer over positions [from, r) of a reduced argument list with prefix-shared term products.
struct ReducedScanner {
    const ComposePlan& plan;
    const std::vector<std::uint64_t>& inner;
    const std::vector<int>& sameClassBefore; // previous position in the same symmetry class, or -1
    std::uint64_t mask;
    unsigned r;
    std::size_t terms;

    std::vector<std::size_t> idx;
    std::vector<std::uint64_t> acc; // acc[j * terms + t]: product of the first j literals of term t

    ReducedScanner(const ComposePlan& p, const std::vector<std::uint64_t>& in, const std::vector<int>& before,
                   std::uint64_t msk)
        : plan(p), inner(in), sameClassBefore(before), mask(msk), r(p.arity()), terms(p.points().size()),
          idx(r, 0), acc((r + 1) * terms, ~std::uint64_t{0}) {}

    std::size_t lowerBound(unsigned j) const {
        return sameClassBefore[j] < 0 ? 0 : idx[static_cast<unsigned>(sameClassBefore[j])];
    }

    void extend(unsigned j) {
        const std::uint64_t g = inner[idx[j]];
        const std::uint64_t* prev = &acc[j * terms];
        std::uint64_t* next = &acc[(j + 1) * terms];
        for (std::size_t t = 0; t < terms; ++t) next[t] = prev[t] & (plan.polarity(t, j) ? g : ~g);
    }

    std::uint64_t value() const {
        std::uint64_t out = 0;
        const std::uint64_t* last = &acc[r * terms];
        for (std::size_t t = 0; t < terms; ++t) out |= last[t];
        return (plan.complemented() ? ~out : out) & mask;
    }

    // Fixes positions [0, from) to `prefix` (already valid) and visits every completion.
    template <class Visit>
    void run(const std::vector<std::size_t>& prefix, unsigned from, Visit&& visit) {
        for (unsigned j = 0; j < from; ++j) {
            idx[j] = prefix[j];
            extend(j);
        }
        const std::size_t N = inner.size();
        for (unsigned j = from; j < r; ++j) {
            idx[j] = lowerBound(j);
            extend(j);
        }
        while (true) {
            visit(value());
            unsigned q = r;
            while (q > from && idx[q - 1] + 1 >= N) --q;
            if (q == from) return;
            --q;
            ++idx[q];
            extend(q);
            for (unsigned j = q + 1; j < r; ++j) {
                idx[j] = lowerBound(j);
                extend(j);
            }
        }
    }
};

} // namespace

int kernelThreads() noexcept {
#ifdef CLONOID_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<int> symmetryClasses(const BooleanFunction& f) {
    const unsigned n = f.arity();
    std::vector<int> label(n, -1);
    std::vector<bool> essential(n);
    for (unsigned i = 0; i < n; ++i) essential[i] = f.isEssential(i + 1);
    int next = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (!essential[i] || label[i] >= 0) continue;
        label[i] = next;
        for (unsigned j = i + 1; j < n; ++j)
            if (essential[j] && label[j] < 0 && swapArguments(f, i, j) == f) label[j] = next;
        ++next;
    }
    return label;
}

BooleanFunction essentialCore(const BooleanFunction& f, std::vector<unsigned>* kept) {
    const unsigned n = f.arity();
    std::vector<unsigned> ess;
    for (unsigned i = 1; i <= n; ++i)
        if (f.isEssential(i)) ess.push_back(i);
    if (kept) *kept = ess;
    if (ess.size() == n || ess.empty()) return f;
    const unsigned r = static_cast<unsigned>(ess.size());
    BooleanFunction core(r);
    for (std::uint64_t a = 0; a < core.tableSize(); ++a) {
        std::uint64_t full = 0;
        for (unsigned j = 0; j < r; ++j)
            if ((a >> (r - 1 - j)) & 1u) full |= std::uint64_t{1} << (n - ess[j]);
        if (f[full]) core.set(a, true);
    }
    return core;
}

CompositeScan scanCompositesSerial(const BooleanFunction& outer, const std::vector<std::uint64_t>& inner,
                                   unsigned m) {
    checkInner(inner, m);
    CompositeScan scan;
    const unsigned n = outer.arity();
    const std::size_t N = inner.size();
    scan.assignmentsCovered = saturatingPow(N, n);
    if (N == 0) return scan;
    const ComposePlan plan(outer);
    const std::uint64_t mask = tailMask(m);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::uint64_t> args(n, inner[0]);
    while (true) {
        ++scan.evaluations;
        seen.insert(plan.applyWord(args.data(), mask));
        unsigned q = n;
        while (q > 0) {
            --q;
            if (++idx[q] < N) {
                args[q] = inner[idx[q]];
                break;
            }
            idx[q] = 0;
            args[q] = inner[0];
            if (q == 0) {
                q = n + 1;
                break;
            }
        }
        if (q == n + 1) break;
    }
    scan.composites = sortedUnique({seen.begin(), seen.end()});
    return scan;
}

CompositeScan scanCompositesParallel(const BooleanFunction& outer, const std::vector<std::uint64_t>& inner,
                                     unsigned m) {
    checkInner(inner, m);
    CompositeScan scan;
    const std::size_t N = inner.size();
    scan.assignmentsCovered = saturatingPow(N, outer.arity());
    if (N == 0) return scan;
    const std::uint64_t mask = tailMask(m);
    if (outer.isConstant()) {
        scan.evaluations = 1;
        scan.composites = {outer.isConstant(true) ? mask : 0};
        return scan;
    }

    const BooleanFunction core = essentialCore(outer);
    const unsigned r = core.arity();
    const ComposePlan plan(core);
    const std::vector<int> cls = symmetryClasses(core);
    std::vector<int> before(r, -1);
    for (unsigned j = 0; j < r; ++j)
        for (unsigned i = j; i-- > 0;)
            if (cls[i] == cls[j]) {
                before[j] = static_cast<int>(i);
                break;
            }

    // Chunks are values of the first coordinate, or of the first two when the pool is small.
    const unsigned split = (r >= 2 && N < 64) ? 2 : 1;
    const long chunks = static_cast<long>(split == 2 ? N * N : N);
    std::vector<std::uint64_t> merged;
    std::uint64_t evaluations = 0;

#pragma omp parallel
    {
        ReducedScanner scanner(plan, inner, before, mask);
        std::unordered_set<std::uint64_t> local;
        std::uint64_t localEvals = 0;
        std::vector<std::size_t> prefix(split);
#pragma omp for schedule(dynamic)
        for (long c = 0; c < chunks; ++c) {
            if (split == 2) {
                prefix[0] = static_cast<std::size_t>(c) / N;
                prefix[1] = static_cast<std::size_t>(c) % N;
                if (before[1] == 0 && prefix[1] < prefix[0]) continue;
            } else {
                prefix[0] = static_cast<std::size_t>(c);
            }
            scanner.run(prefix, split, [&](std::uint64_t w) {
                ++localEvals;
                local.insert(w);
            });
        }
#pragma omp critical
        {
            merged.insert(merged.end(), local.begin(), local.end());
            evaluations += localEvals;
        }
    }
    scan.evaluations = evaluations;
    scan.composites = sortedUnique(std::move(merged));
    return scan;
}

std::optional<std::vector<std::size_t>> findInnerTuple(const BooleanFunction& outer,
                                                       const std::vector<std::uint64_t>& inner, unsigned m,
                                                       std::uint64_t target) {
    checkInner(inner, m);
    const unsigned n = outer.arity();
    const std::size_t N = inner.size();
    if (N == 0) return std::nullopt;
    const ComposePlan plan(outer);
    const std::uint64_t mask = tailMask(m);
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::uint64_t> args(n, inner[0]);
    while (true) {
        if (plan.applyWord(args.data(), mask) == target) return idx;
        unsigned q = n;
        while (q > 0) {
            --q;
            if (++idx[q] < N) {
                args[q] = inner[idx[q]];
                break;
            }
            idx[q] = 0;
            args[q] = inner[0];
            if (q == 0) return std::nullopt;
        }
    }
}

} // namespace clonoid
