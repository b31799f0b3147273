#pragma once

#include "clonoid/bf.hpp"

#include <iosfwd>
#include <vector>

namespace clonoid {

enum class Provenance { Exact, LeftClosureApproximate };

/// Deduplicated set of Boolean functions kept in canonical order.
class FunctionSet {
public:
    FunctionSet() = default;
    explicit FunctionSet(std::vector<BooleanFunction> members, Provenance p = Provenance::Exact);
    FunctionSet(std::initializer_list<BooleanFunction> members);

    /// Reads one truth-table literal per line; `#` starts a comment, blank lines are skipped.
    static FunctionSet read(std::istream& in);
    static FunctionSet readFile(const std::string& path);
    void write(std::ostream& out) const;

    const std::vector<BooleanFunction>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    bool contains(const BooleanFunction& f) const;
    std::vector<BooleanFunction> ofArity(unsigned m) const;
    std::vector<unsigned> arities() const;
    unsigned maxArity() const noexcept;

    Provenance provenance() const noexcept { return provenance_; }
    bool isExact() const noexcept { return provenance_ == Provenance::Exact; }
    void setProvenance(Provenance p) noexcept { provenance_ = p; }

    FunctionSet unite(const FunctionSet& other) const;
    FunctionSet intersect(const FunctionSet& other) const;
    bool isSubsetOf(const FunctionSet& other) const;
    /// Members of arity <= m.
    FunctionSet restrictArity(unsigned m) const;

    friend bool operator==(const FunctionSet& a, const FunctionSet& b) noexcept {
        return a.members_ == b.members_;
    }

private:
    std::vector<BooleanFunction> members_;
    Provenance provenance_ = Provenance::Exact;
};

} // namespace clonoid
