#include "clonoid/hypergraph.hpp"

#include "clonoid/engine.hpp"
#include "clonoid/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace clonoid {

namespace {

struct EdgeCollector {
    const std::vector<std::uint64_t>& pts;
    std::uint64_t full;
    unsigned k;
    std::vector<std::vector<std::size_t>>& out;
    std::vector<std::size_t> cur;

    std::uint64_t meetWithout(std::size_t skip) const {
        std::uint64_t m = full;
        for (std::size_t j = 0; j < cur.size(); ++j)
            if (j != skip) m &= pts[cur[j]];
        return m;
    }

    bool minimal() const {
        if (cur.size() <= 2) return true;
        for (std::size_t j = 0; j + 1 < cur.size(); ++j)
            if (meetWithout(j) == 0) return false;
        return true;
    }

    void run(std::size_t from, std::uint64_t meet) {
        for (std::size_t v = from; v < pts.size(); ++v) {
            const std::uint64_t next = meet & pts[v];
            cur.push_back(v);
            const bool edge = cur.size() >= 2 && next == 0;
            if (k == kRankInfinity) {
                if (edge) {
                    if (minimal()) out.push_back(cur);
                } else {
                    run(v + 1, next);
                }
            } else {
                if (edge) out.push_back(cur);
                if (cur.size() < k) run(v + 1, next);
            }
            cur.pop_back();
        }
    }
};

std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

// Number of multisets of size s drawn from n items, saturating.
std::uint64_t multisetCount(std::uint64_t n, unsigned s) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= s; ++i) {
        r = saturatingMul(r, n + i - 1);
        if (r == std::numeric_limits<std::uint64_t>::max()) return r;
        r /= i;
    }
    return r;
}

void requireZeroPreserving(const BooleanFunction& f, const char* where) {
    if (f[0]) throw PreconditionError(std::string(where) + ": " + format(f) + " does not preserve 0");
}

} // namespace

std::vector<std::size_t> Hypergraph::degrees() const {
    std::vector<std::size_t> d(vertices.size(), 0);
    for (const auto& e : edges)
        for (auto v : e) ++d[v];
    return d;
}

bool Hypergraph::containsEdgeWithin(const std::vector<char>& members) const {
    for (const auto& e : edges)
        if (std::all_of(e.begin(), e.end(), [&](std::size_t v) { return members[v] != 0; })) return true;
    return false;
}

Hypergraph disjointnessHypergraph(const BooleanFunction& f, unsigned k) {
    if (k < 2) throw DomainError("disjointnessHypergraph: rank must be at least 2");
    Hypergraph G;
    G.rank = k;
    const auto pts = f.truePoints();
    for (auto p : pts) G.vertices.emplace_back(f.arity(), p);
    const std::uint64_t full = f.arity() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.arity()) - 1;
    EdgeCollector collector{pts, full, k, G.edges, {}};
    collector.run(0, full);
    std::sort(G.edges.begin(), G.edges.end());
    return G;
}

std::optional<std::vector<std::size_t>> findHomomorphism(const Hypergraph& G, const Hypergraph& H) {
    const std::size_t nG = G.vertices.size(), nH = H.vertices.size();
    if (nG == 0) return std::vector<std::size_t>{};
    if (nH == 0) return std::nullopt;

    const auto deg = G.degrees();
    std::vector<std::size_t> order(nG);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> pos(nG);
    for (std::size_t i = 0; i < nG; ++i) pos[order[i]] = i;

    // Each edge is checked once its last vertex in search order is assigned.
    std::vector<std::vector<std::size_t>> due(nG);
    for (std::size_t e = 0; e < G.edges.size(); ++e) {
        std::size_t last = 0;
        for (auto v : G.edges[e]) last = std::max(last, pos[v]);
        due[last].push_back(e);
    }

    std::vector<std::size_t> h(nG, 0);
    std::vector<char> image(nH, 0);
    auto edgeOk = [&](const std::vector<std::size_t>& e) {
        for (auto v : e) image[h[v]] = 1;
        const bool ok = H.containsEdgeWithin(image);
        for (auto v : e) image[h[v]] = 0;
        return ok;
    };

    std::vector<std::size_t> next(nG, 0);
    std::size_t depth = 0;
    while (true) {
        if (next[depth] == nH) {
            next[depth] = 0;
            if (depth == 0) return std::nullopt;
            --depth;
            continue;
        }
        const std::size_t v = order[depth];
        h[v] = next[depth]++;
        bool ok = true;
        for (auto e : due[depth])
            if (!edgeOk(G.edges[e])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (depth + 1 == nG) return h;
        ++depth;
    }
}

bool existsHomomorphism(const Hypergraph& G, const Hypergraph& H) { return findHomomorphism(G, H).has_value(); }

bool ukMinor(const BooleanFunction& f, const BooleanFunction& g, unsigned k) {
    requireZeroPreserving(f, "ukMinor");
    requireZeroPreserving(g, "ukMinor");
    return existsHomomorphism(disjointnessHypergraph(f, k), disjointnessHypergraph(g, k));
}

std::vector<BooleanFunction> separatingPart(unsigned k, unsigned m) {
    if (m == 0 || m > 4) throw DomainError("separatingPart: arity must lie in 1..4");
    std::vector<BooleanFunction> out;
    for (auto& h : allFunctions(m))
        if (isSeparating1(h, k)) out.push_back(std::move(h));
    return out;
}

bool ukMinorBrute(const BooleanFunction& f, const BooleanFunction& g, unsigned k, std::uint64_t budget) {
    const unsigned m = f.arity();
    const auto pool = separatingPart(k, m);
    // Arguments of g that are interchangeable only need nondecreasing index tuples.
    std::vector<unsigned> classSizes;
    for (int label : symmetryClasses(g)) {
        if (label < 0) continue;
        if (static_cast<std::size_t>(label) >= classSizes.size()) classSizes.resize(label + 1, 0);
        ++classSizes[label];
    }
    std::uint64_t cost = 1;
    for (unsigned s : classSizes) cost = saturatingMul(cost, multisetCount(pool.size(), s));
    if (cost > budget) throw BudgetExceeded("ukMinorBrute", cost, budget);
    std::vector<std::uint64_t> words;
    for (const auto& h : pool) words.push_back(h.word0());
    const auto scan = scanCompositesParallel(g, words, m);
    return std::binary_search(scan.composites.begin(), scan.composites.end(), f.word0());
}

CheckReport u2UinfGenerationEquality(const FunctionSet& K, unsigned m, std::uint64_t budget) {
    for (const auto& f : K) requireZeroPreserving(f, "u2UinfGenerationEquality");
    const Registry& reg = Registry::standard();
    CheckReport rep;
    rep.checkId = "u2-uinf-generation";
    const FunctionSet right = rightCompose(K, reg.get("U2"), m, budget);
    const FunctionSet left = right.empty() ? right : leftClose(right, reg.get("Uinf"), LeftStrategy::Auto, 3, budget);
    rep.count("arity", m);
    rep.count("rightSize", static_cast<std::int64_t>(right.size()));
    rep.count("leftSize", static_cast<std::int64_t>(left.size()));
    if (!left.isExact()) rep.notes.push_back("left closure approximate");
    if (!right.isSubsetOf(left)) {
        for (const auto& f : right)
            if (!left.contains(f)) {
                rep.fail({{"missingFromLeft", format(f)}, {"arity", m}});
                return rep;
            }
    }
    for (const auto& f : left)
        if (!right.contains(f)) {
            std::vector<std::string> gens;
            for (const auto& g : K) gens.push_back(format(g));
            rep.fail({{"extraInLeft", format(f)}, {"generators", gens}, {"arity", m}});
            return rep;
        }
    return rep;
}

std::string toDot(const Hypergraph& H, const std::string& name) {
    std::ostringstream out;
    const bool plain = H.rank == 2;
    out << "graph " << '"' << name << "\" {\n";
    for (std::size_t v = 0; v < H.vertices.size(); ++v)
        out << "  v" << v << " [label=\"" << H.vertices[v].toString() << "\"];\n";
    if (plain) {
        for (const auto& e : H.edges) out << "  v" << e[0] << " -- v" << e[1] << ";\n";
    } else {
        for (std::size_t i = 0; i < H.edges.size(); ++i) {
            out << "  e" << i << " [shape=box,label=\"\",width=0.15,height=0.15];\n";
            for (auto v : H.edges[i]) out << "  v" << v << " -- e" << i << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace clonoid
