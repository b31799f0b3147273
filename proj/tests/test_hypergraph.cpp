#include <doctest.h>

#include "clonoid/errors.hpp"
#include "clonoid/families.hpp"
#include "clonoid/hypergraph.hpp"

#include <random>

using namespace clonoid;

namespace {

Hypergraph graph(std::size_t vertices, std::vector<std::vector<std::size_t>> edges) {
    Hypergraph H;
    for (std::size_t i = 0; i < vertices; ++i) H.vertices.push_back(BitTuple(4, i));
    H.edges = std::move(edges);
    return H;
}

/// Every vertex map, tried directly.
bool homBrute(const Hypergraph& G, const Hypergraph& H) {
    const std::size_t n = G.vertices.size(), k = H.vertices.size();
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<std::size_t> h(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& e : G.edges) {
            std::vector<char> img(k, 0);
            for (std::size_t v : e) img[h[v]] = 1;
            if (!H.containsEdgeWithin(img)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && ++h[i] == k) h[i++] = 0;
        if (i == n) return false;
    }
}

} // namespace

TEST_CASE("disjointness hypergraphs") {
    const Hypergraph a = disjointnessHypergraph(BooleanFunction::conjunction(2), 2);
    CHECK(a.vertices.size() == 1);
    CHECK(a.edges.empty());
    const Hypergraph q = disjointnessHypergraph(pippengerQ(3), 2);
    CHECK(q.vertices.size() == 4);
    CHECK(q.edges.size() == 3);
    const Hypergraph f = disjointnessHypergraph(pippengerF(5), 2);
    const auto e1 = charTuple(5, {1}), e1bar = e1.complement();
    bool found = false;
    for (const auto& e : f.edges)
        if (e.size() == 2 && f.vertices[e[0]] == e1bar && f.vertices[e[1]] == e1) found = true;
    CHECK(found);
    const Hypergraph inf = disjointnessHypergraph(pippengerQ(4), kRankInfinity);
    CHECK(inf.minimalEdgesOnly());
    CHECK(inf.edges.size() == 6);
}

TEST_CASE("homomorphisms") {
    const Hypergraph empty = graph(3, {});
    const Hypergraph edge = graph(2, {{0, 1}});
    const Hypergraph triangle = graph(3, {{0, 1}, {0, 2}, {1, 2}});
    const Hypergraph k4 = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(existsHomomorphism(empty, edge));
    CHECK(existsHomomorphism(empty, triangle));
    CHECK_FALSE(existsHomomorphism(triangle, edge));
    CHECK(existsHomomorphism(triangle, k4));
    const auto h = findHomomorphism(triangle, k4);
    REQUIRE(h);
    CHECK((*h)[0] != (*h)[1]);
}

TEST_CASE("homomorphism search agrees with brute force") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        auto randomGraph = [&](std::size_t n) {
            std::vector<std::vector<std::size_t>> edges;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (rng() % 3 == 0) edges.push_back({i, j});
            if (n >= 3 && rng() % 2) edges.push_back({0, 1, 2});
            return graph(n, edges);
        };
        const Hypergraph G = randomGraph(1 + rng() % 5), H = randomGraph(1 + rng() % 4);
        CHECK(existsHomomorphism(G, H) == homBrute(G, H));
    }
}

TEST_CASE("minor order") {
    const BooleanFunction q3 = pippengerQ(3), q4 = pippengerQ(4), f5 = pippengerF(5);
    CHECK(ukMinor(f5, f5, 2));
    CHECK(ukMinor(q3, q4, 2));
    CHECK_FALSE(ukMinor(q4, q3, 2));
    CHECK(ukMinorBrute(q3, q3, 2));
    CHECK(ukMinorBrute(q3, q4, 2));
    CHECK_THROWS_AS(ukMinorBrute(q4, q3, 2), BudgetExceeded);
    CHECK_FALSE(ukMinorBrute(q4, q3, 2, 1'000'000'000));
}

TEST_CASE("separating parts") {
    for (unsigned m = 1; m <= 3; ++m)
        for (const auto& f : separatingPart(2, m)) CHECK(isSeparating1(f, 2));
    CHECK(separatingPart(kRankInfinity, 2).size() <= separatingPart(2, 2).size());
}

TEST_CASE("generation under two separating ranks") {
    CHECK(u2UinfGenerationEquality({BooleanFunction::conjunction(2)}, 2).passed());
    CHECK(u2UinfGenerationEquality({pippengerQ(3)}, 3).passed());
    CHECK(u2UinfGenerationEquality(FunctionSet{}, 2).passed());
}

TEST_CASE("dot output") {
    const std::string dot = toDot(disjointnessHypergraph(pippengerQ(3), 2), "q3");
    CHECK(dot.find("graph \"q3\"") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
