#pragma once

#include "clonoid/bf.hpp"

#include <set>
#include <string>
#include <vector>

namespace clonoid {

enum class FamilyKind { PippengerF, PippengerQ };

/// Parses "f" or "q".
FamilyKind parseFamilyKind(const std::string& s);
std::string toString(FamilyKind k);

/// f_n: true exactly on tuples of weight 1 and n-1 (n >= 3).
BooleanFunction pippengerF(unsigned n);
/// q_n: true exactly on tuples of weight 1 and n (n >= 3).
BooleanFunction pippengerQ(unsigned n);
BooleanFunction family(FamilyKind k, unsigned n);

/// Lift of a monotone φ of arity m to arity m+2: 1 if c = d = 1, φ(a) if c = 1 and d = 0, else 0.
BooleanFunction witnessM(const BooleanFunction& phi);
/// As witnessM with φ(ā) in the middle case.
BooleanFunction witnessMneg(const BooleanFunction& phi);
/*! Lift of any φ of arity n to arity 2n+2 over (a, b, c, d): 1 if c = 1 and
    (d = 1 or w(ab) > n); φ(a) if c = 1, d = 0 and a = b̄; 0 otherwise. */
BooleanFunction witnessAll(const BooleanFunction& phi);
/// Lift of φ of arity m to arity m+1: φ(a_1..a_m) if a_{m+1} = 1, else 0.
BooleanFunction phiM(const BooleanFunction& phi);
/// As phiM with φ(ā_1..ā_m).
BooleanFunction phiMneg(const BooleanFunction& phi);
/*! Lift of φ of arity m to arity 2m+1: φ(a_1..a_m) if a_{m+i} = ā_i for all i and
    a_{2m+1} = 1; 1 if more than m of a_1..a_{2m} are 1 and a_{2m+1} = 1; 0 otherwise. */
BooleanFunction witnessOX(const BooleanFunction& phi);

/// pr_1..pr_m, 1, 0 (arity m): inner tuple recovering φ from witnessM(φ).
std::vector<BooleanFunction> recipeM(unsigned m);
/// ¬pr_1..¬pr_m, 1, 0.
std::vector<BooleanFunction> recipeMneg(unsigned m);
/// pr_1..pr_n, ¬pr_1..¬pr_n, 1, 0.
std::vector<BooleanFunction> recipeAll(unsigned n);

/// The binary α (or α') obtained from a comparable pair u < v, and the β family built from it.
struct AlphaBeta {
    BitTuple u, v;
    bool primed = false;   ///< false: f(u) = 1, f(v) = 0 (f ∈ OX); true: f(u) = 0, f(v) = 1 (f(0) = 1)
    BooleanFunction alpha; ///< f with pr_1 where u_i = 1, pr_2 where u_i = 0 < v_i, and 0 elsewhere

    /// α(∨_m, pr_i^(m)).
    BooleanFunction beta(unsigned m, unsigned i) const;
    std::vector<BooleanFunction> betas(unsigned m) const;
};

/// For f(0) = 0 and f not monotone. Throws PreconditionError otherwise.
AlphaBeta alphaBeta(const BooleanFunction& f);
/// For f(0) = 1 and f not antitone. Throws PreconditionError otherwise.
AlphaBeta alphaBetaPrime(const BooleanFunction& f);

/// pr_1..pr_m, β_1..β_m, ∨_m.
std::vector<BooleanFunction> recipeOX(const AlphaBeta& ab, unsigned m);
/// β'_1..β'_m, ¬pr_1..¬pr_m, 1.
std::vector<BooleanFunction> recipeIX(const AlphaBeta& ab, unsigned m);
/// pr_1..pr_m, ¬pr_1..¬pr_m, 1.
std::vector<BooleanFunction> recipeOXAll(unsigned m);

/*! \brief Inner tuple of projections and constants turning f into pr_i^(m) or its negation.

  Uses the first pair a < b differing in one coordinate with f(a) ≠ f(b) in the
  required direction: constants where a and b agree, pr_i where they differ.
  Throws PreconditionError if no such pair exists.
*/
std::vector<BooleanFunction> projectionRecipe(const BooleanFunction& f, unsigned m, unsigned i, bool negated);

/// The n maps of arity n+2: projections onto [n+2] minus S in ascending order, then the parity of S.
std::vector<BooleanFunction> buildGS(unsigned n, const std::set<unsigned>& S);
/// Conjunction over all 3-subsets S of [n+2] of φ ∘ g^S, where φ has arity n.
BooleanFunction buildTheta(const BooleanFunction& phi);
BooleanFunction buildTheta(FamilyKind k, unsigned n);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<std::set<unsigned>> subsetsOfSize(unsigned n, unsigned k);

} // namespace clonoid
