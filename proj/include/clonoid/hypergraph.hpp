#pragma once

#include "clonoid/function_set.hpp"
#include "clonoid/registry.hpp"
#include "clonoid/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clonoid {

/*! \brief Hypergraph on a list of tuples.

  For rank infinity only the inclusion-minimal edges are stored; the full edge set
  is their upward closure within the vertex set. Edges are sorted vertex-index lists.
*/
struct Hypergraph {
    std::vector<BitTuple> vertices;
    std::vector<std::vector<std::size_t>> edges;
    unsigned rank = 2; ///< kRankInfinity for the minimal-edge representation

    bool minimalEdgesOnly() const noexcept { return rank == kRankInfinity; }
    std::vector<std::size_t> degrees() const;
    /// True if some edge is a subset of `members` (a 0/1 flag per vertex).
    bool containsEdgeWithin(const std::vector<char>& members) const;
};

/// G(f,k): true points of f in ascending index order; sets of 2..k true points with zero meet.
Hypergraph disjointnessHypergraph(const BooleanFunction& f, unsigned k);

/// Vertex map h with h(E) containing an edge of H for every edge E of G; h[i] indexes H's vertices.
std::optional<std::vector<std::size_t>> findHomomorphism(const Hypergraph& G, const Hypergraph& H);
bool existsHomomorphism(const Hypergraph& G, const Hypergraph& H);

/// f ≤ g under U_k minors, decided by G(f,k) → G(g,k). Requires f(0) = g(0) = 0.
bool ukMinor(const BooleanFunction& f, const BooleanFunction& g, unsigned k);

/// The m-ary part of U_k by filtering all m-ary functions (m <= 4).
std::vector<BooleanFunction> separatingPart(unsigned k, unsigned m);

/// f ∈ {g} U_k^(m) by enumerating every inner tuple; throws BudgetExceeded past the budget.
bool ukMinorBrute(const BooleanFunction& f, const BooleanFunction& g, unsigned k,
                  std::uint64_t budget = kDefaultBudget);

/// Compares K U_2 with U_inf (K U_2) at arity m. K must lie in OX.
CheckReport u2UinfGenerationEquality(const FunctionSet& K, unsigned m, std::uint64_t budget = kDefaultBudget);

/// Graphviz text: rank 2 as a plain graph, otherwise a bipartite incidence drawing.
std::string toDot(const Hypergraph& H, const std::string& name = "G");

} // namespace clonoid
