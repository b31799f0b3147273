#pragma once

#include "clonoid/function_set.hpp"
#include "clonoid/report.hpp"

#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clonoid {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
/// Separation rank standing for k = infinity.
inline constexpr unsigned kRankInfinity = std::numeric_limits<unsigned>::max();

/// Structural description from which membership and extension tests are derived.
struct CloneShape {
    enum class Kind { EssentiallyUnary, Conjunctive, Disjunctive, Affine, SelfDual, General };
    Kind kind = Kind::General;
    bool t0 = false;       ///< f(0) = 0
    bool t1 = false;       ///< f(1) = 1
    bool monotone = false;
    bool selfDual = false; ///< affine kind only: odd number of variables
    unsigned uRank = 0;    ///< 1-separating of this rank, 0 if not required
    unsigned wRank = 0;    ///< 0-separating of this rank, 0 if not required
    bool allowProjection = true;  ///< essentially unary kind
    bool allowNegation = false;   ///< essentially unary kind
    bool allowConst0 = false;     ///< essentially unary and semilattice kinds
    bool allowConst1 = false;
};

struct CloneDescriptor {
    std::string id;      ///< ASCII id used on the command line
    std::string name;    ///< display name
    std::string description;
    CloneShape shape;
    std::vector<BooleanFunction> generators;
    std::string dualId;
    bool generatorExact = false;
};

/// Named clones of Post's lattice together with the covering relation between them.
class Registry {
public:
    Registry(std::vector<CloneDescriptor> clones, std::vector<std::pair<std::string, std::string>> covers);

    /// Clones with k in {2, 3, infinity} and the standard generators.
    static const Registry& standard();

    const std::vector<CloneDescriptor>& clones() const noexcept { return clones_; }
    const std::vector<std::pair<std::string, std::string>>& covers() const noexcept { return covers_; }
    const CloneDescriptor* find(std::string_view id) const noexcept;
    /// Throws DomainError naming `--list-clones` for unknown ids.
    const CloneDescriptor& get(std::string_view id) const;
    const CloneDescriptor& dualClone(const CloneDescriptor& c) const;
    /// Inclusion a ⊆ b in the transitive closure of the covering relation.
    bool isSubclone(std::string_view a, std::string_view b) const;

private:
    std::vector<CloneDescriptor> clones_;
    std::vector<std::pair<std::string, std::string>> covers_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::vector<bool>> below_; // below_[i][j]: clone i ⊆ clone j
};

std::string rankName(unsigned k);

/// Smallest number of true points whose meet is the zero tuple; nullopt if none exists.
std::optional<unsigned> minZeroCover(const BooleanFunction& f);
/// Smallest number of false points whose join is the all-ones tuple; nullopt if none exists.
std::optional<unsigned> minOneCover(const BooleanFunction& f);

bool preservesZero(const BooleanFunction& f);
bool preservesOne(const BooleanFunction& f);
bool isMonotone(const BooleanFunction& f);
bool isSelfDual(const BooleanFunction& f);
bool isAffine(const BooleanFunction& f);
bool isSeparating1(const BooleanFunction& f, unsigned k); ///< U_k
bool isSeparating0(const BooleanFunction& f, unsigned k); ///< W_k

bool contains(const CloneDescriptor& c, const BooleanFunction& f);

/// m-ary part by generator closure (generator-exact clones) or predicate filter.
FunctionSet arityPart(const CloneDescriptor& c, unsigned m, std::uint64_t budget = kDefaultBudget);
FunctionSet arityPartByClosure(const CloneDescriptor& c, unsigned m, std::uint64_t budget = kDefaultBudget);
FunctionSet arityPartByFilter(const CloneDescriptor& c, unsigned m, std::uint64_t budget = kDefaultBudget);
/// |C^(m)| from closed forms where known, by enumeration for m <= 4, otherwise nullopt.
std::optional<std::uint64_t> arityPartSize(const CloneDescriptor& c, unsigned m);

/// All functions of arity m in canonical order (m <= 4).
std::vector<BooleanFunction> allFunctions(unsigned m);

/*! \brief Fixpoint closure of a set of m-ary functions under the given operations.

  Every member is m-ary; each operation of arity r is applied coordinatewise to all
  r-tuples of current members until nothing new appears.
*/
std::vector<BooleanFunction> closeUnder(const std::vector<BooleanFunction>& start,
                                        const std::vector<BooleanFunction>& operations,
                                        std::uint64_t budget, std::uint64_t* evaluations = nullptr);

struct PropertyRecord {
    bool t0 = false, t1 = false, monotone = false, selfDual = false, affine = false;
    bool u2 = false, u3 = false, uInf = false;
    bool w2 = false, w3 = false, wInf = false;
    std::string minimalClone;
    /// "agrees", "differs" or "skipped": closure of {f} against the minimal clone at arity <= 3.
    std::string crossCheck;
};

PropertyRecord classify(const BooleanFunction& f, const Registry& reg = Registry::standard());

CheckReport registrySelfTest(unsigned maxArity = 3, const Registry& reg = Registry::standard());

} // namespace clonoid
