#include "clonoid/function_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace clonoid {

FunctionSet::FunctionSet(std::vector<BooleanFunction> members, Provenance p)
    : members_(std::move(members)), provenance_(p) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

FunctionSet::FunctionSet(std::initializer_list<BooleanFunction> members)
    : FunctionSet(std::vector<BooleanFunction>(members)) {}

FunctionSet FunctionSet::read(std::istream& in) {
    std::vector<BooleanFunction> fs;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        try {
            fs.push_back(parse(std::string_view(line).substr(first, last - first + 1)));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineNo) + ": " + e.what(), e.position());
        }
    }
    return FunctionSet(std::move(fs));
}

FunctionSet FunctionSet::readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open generator file '" + path + "'");
    return read(in);
}

void FunctionSet::write(std::ostream& out) const {
    for (const auto& f : members_) out << format(f) << '\n';
}

bool FunctionSet::contains(const BooleanFunction& f) const {
    return std::binary_search(members_.begin(), members_.end(), f);
}

std::vector<BooleanFunction> FunctionSet::ofArity(unsigned m) const {
    auto lo = std::lower_bound(members_.begin(), members_.end(), m,
                               [](const BooleanFunction& f, unsigned a) { return f.arity() < a; });
    auto hi = std::upper_bound(members_.begin(), members_.end(), m,
                               [](unsigned a, const BooleanFunction& f) { return a < f.arity(); });
    return {lo, hi};
}

std::vector<unsigned> FunctionSet::arities() const {
    std::vector<unsigned> as;
    for (const auto& f : members_)
        if (as.empty() || as.back() != f.arity()) as.push_back(f.arity());
    return as;
}

unsigned FunctionSet::maxArity() const noexcept { return members_.empty() ? 0 : members_.back().arity(); }

FunctionSet FunctionSet::unite(const FunctionSet& other) const {
    std::vector<BooleanFunction> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(out));
    const bool exact = isExact() && other.isExact();
    return FunctionSet(std::move(out), exact ? Provenance::Exact : Provenance::LeftClosureApproximate);
}

FunctionSet FunctionSet::intersect(const FunctionSet& other) const {
    std::vector<BooleanFunction> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out));
    const bool exact = isExact() && other.isExact();
    return FunctionSet(std::move(out), exact ? Provenance::Exact : Provenance::LeftClosureApproximate);
}

bool FunctionSet::isSubsetOf(const FunctionSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

FunctionSet FunctionSet::restrictArity(unsigned m) const {
    std::vector<BooleanFunction> out;
    for (const auto& f : members_)
        if (f.arity() <= m) out.push_back(f);
    return FunctionSet(std::move(out), provenance_);
}

} // namespace clonoid
