#pragma once

#include "clonoid/registry.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace clonoid {

/// How the left closure C2 G is computed.
enum class LeftStrategy {
    Auto,            ///< generators if exact, else extension filter up to arity 4, else bounded fixpoint
    Generators,      ///< fixpoint under the clone's generators (exact for generator-exact clones)
    ExtensionFilter, ///< every m-ary function tested with the extension oracle (exact, m <= 4)
    BoundedFixpoint, ///< fixpoint under C2 members of arity <= probe arity (approximate)
};

struct GenerationRequest {
    FunctionSet generators;
    std::string sourceClone; ///< C1
    std::string targetClone; ///< C2
    unsigned outputArity = 1;
    std::uint64_t budget = kDefaultBudget;
    LeftStrategy strategy = LeftStrategy::Auto;
    unsigned probeArity = 3;
};

enum class Verdict { True, False, Indeterminate };
std::string toString(Verdict v);

/*! \brief Exact test of f ∈ C2 G for m-ary G.

  f = φ(g_1, ..., g_l) for some φ ∈ C2 exactly when the partial map sending the
  column (g_1(a), ..., g_l(a)) to f(a) is well defined and extends to a member of
  C2. The extension condition is decided from the clone's shape.
*/
class ExtensionOracle {
public:
    ExtensionOracle(const CloneDescriptor& target, std::vector<BooleanFunction> inner);
    ~ExtensionOracle();
    ExtensionOracle(ExtensionOracle&&) noexcept;
    ExtensionOracle& operator=(ExtensionOracle&&) noexcept;

    bool contains(const BooleanFunction& f) const;
    unsigned arity() const noexcept { return arity_; }
    /// Number of distinct columns (g_1(a), ..., g_l(a)).
    std::size_t imagePoints() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    unsigned arity_ = 0;
};

/// {f(g_1, ..., g_n) : f ∈ F, g_i ∈ C1^(m)}. Throws BudgetExceeded when Σ |C1^(m)|^arity(f) exceeds the budget.
FunctionSet rightCompose(const FunctionSet& F, const CloneDescriptor& C1, unsigned m,
                         std::uint64_t budget = kDefaultBudget, std::uint64_t* evaluations = nullptr);
/// Same set computed with the serial reference kernel.
FunctionSet rightComposeReference(const FunctionSet& F, const CloneDescriptor& C1, unsigned m,
                                  std::uint64_t budget = kDefaultBudget);

/// C2 G for G of a single arity; approximate results are flagged on the returned set.
FunctionSet leftClose(const FunctionSet& G, const CloneDescriptor& C2, LeftStrategy strategy = LeftStrategy::Auto,
                      unsigned probeArity = 3, std::uint64_t budget = kDefaultBudget,
                      std::uint64_t* evaluations = nullptr);

/// m-ary part of the clonoid generated by F: C2 (F C1) at arity m.
FunctionSet generateClonoid(const GenerationRequest& req, const Registry& reg = Registry::standard());

/// Right composition then an exact extension test. Indeterminate only for the bounded-fixpoint strategy.
Verdict isClonoidMember(const BooleanFunction& f, const FunctionSet& F, const CloneDescriptor& C1,
                        const CloneDescriptor& C2, std::uint64_t budget = kDefaultBudget,
                        LeftStrategy strategy = LeftStrategy::Auto);

/// |C1^(m)|^maxArity(F) · |F|, saturating; the maximum value when |C1^(m)| is unknown.
std::uint64_t estimateCost(const GenerationRequest& req, const Registry& reg = Registry::standard());

enum class TransformKind { Negate, InnerNegate, Dual, UnionNegations, UnionConst0, UnionConst1, UnionConstBoth };
FunctionSet transformSet(const FunctionSet& K, TransformKind kind);

/// A function class given by a predicate or by explicit members; enumerable up to arity 4 for predicates.
class FunctionClass {
public:
    static FunctionClass fromPredicate(std::string name, std::function<bool(const BooleanFunction&)> pred);
    static FunctionClass fromSet(std::string name, FunctionSet members);
    static FunctionClass fromClone(const CloneDescriptor& c);

    const std::string& name() const noexcept { return name_; }
    bool contains(const BooleanFunction& f) const;
    std::vector<BooleanFunction> members(unsigned n) const;

private:
    std::string name_;
    std::function<bool(const BooleanFunction&)> pred_;
    std::shared_ptr<const FunctionSet> set_;
};

/// Pairs (outer arity bound, inner arity): every outer arity up to the bound is tried.
struct StabilityBounds {
    std::vector<std::pair<unsigned, unsigned>> right;
    std::vector<std::pair<unsigned, unsigned>> left;
    /// Outer and inner arities up to m on the right; outer up to p, inner up to m on the left.
    static StabilityBounds uniform(unsigned m, unsigned p);
};

/*! \brief Bounded check of K C1 ⊆ K and C2 K ⊆ K.

  Right: f(g_1, ..., g_n) with f ∈ K, g_i ∈ C1. Left: φ(γ_1, ..., γ_l) with φ ∈ C2,
  γ_i ∈ K. Composites must land in K. The first violation is the counterexample.
*/
CheckReport isStable(const FunctionClass& K, const CloneDescriptor& C1, const CloneDescriptor& C2,
                     const StabilityBounds& bounds);
CheckReport isStable(const FunctionClass& K, const CloneDescriptor& C1, const CloneDescriptor& C2, unsigned m = 3,
                     unsigned p = 3);
/// One side of isStable.
CheckReport isRightStable(const FunctionClass& K, const CloneDescriptor& C1,
                          const std::vector<std::pair<unsigned, unsigned>>& bounds);
CheckReport isLeftStable(const FunctionClass& K, const CloneDescriptor& C2,
                         const std::vector<std::pair<unsigned, unsigned>>& bounds);

} // namespace clonoid
