#pragma once

#include "clonoid/bf.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace clonoid {

/// Distinct composites of one outer function over a pool of one-word inner tables.
struct CompositeScan {
    std::vector<std::uint64_t> composites; ///< ascending by word value
    std::uint64_t evaluations = 0;         ///< inner tuples actually evaluated
    std::uint64_t assignmentsCovered = 0;  ///< |inner|^arity(outer), saturating
};

/// Symmetry classes of the arguments of f: equal labels mark arguments whose
/// transposition leaves f unchanged; inessential arguments are labelled -1.
std::vector<int> symmetryClasses(const BooleanFunction& f);

/// f with its inessential arguments removed (order of the rest kept); returns f itself if all are essential.
BooleanFunction essentialCore(const BooleanFunction& f, std::vector<unsigned>* kept = nullptr);

/// Plain enumeration of every tuple in inner^n. The reference kernel.
CompositeScan scanCompositesSerial(const BooleanFunction& outer, const std::vector<std::uint64_t>& inner,
                                   unsigned m);

/*! \brief Reduced enumeration with OpenMP workers.

  Only essential arguments are enumerated, symmetric arguments take nondecreasing
  indices, and partial conjunctions are shared between tuples with a common prefix.
  Work is split over the first one or two coordinates; results are merged and sorted.
*/
CompositeScan scanCompositesParallel(const BooleanFunction& outer, const std::vector<std::uint64_t>& inner,
                                     unsigned m);

/// An inner tuple (indices into `inner`) realizing `target`, searched serially.
std::optional<std::vector<std::size_t>> findInnerTuple(const BooleanFunction& outer,
                                                       const std::vector<std::uint64_t>& inner, unsigned m,
                                                       std::uint64_t target);

/// Number of worker threads the parallel kernel will use.
int kernelThreads() noexcept;

} // namespace clonoid
