#pragma once

#include "clonoid/errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace clonoid {

/// Largest arity the cap may ever be raised to.
inline constexpr unsigned kHardArityLimit = 24;

/// Current arity cap (default 16). Operations refuse larger inputs.
unsigned arityCap() noexcept;
void setArityCap(unsigned cap);

/// Throws DomainError if n is 0 or exceeds the cap.
void checkArity(unsigned n, const char* where);

/// Mask selecting the valid bits of a one-word table of arity m (all ones for m >= 6).
constexpr std::uint64_t tailMask(unsigned m) noexcept {
    return m >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << m)) - 1);
}

/// Number of 64-bit words of a table of arity m.
constexpr std::size_t wordCount(unsigned m) noexcept {
    return m <= 6 ? 1 : (std::size_t{1} << (m - 6));
}

/// A 0/1 tuple stored as its table index: a1 is the most significant bit.
struct BitTuple {
    unsigned width = 1;
    std::uint64_t index = 0;

    BitTuple() = default;
    BitTuple(unsigned w, std::uint64_t idx);
    static BitTuple fromBits(const std::vector<int>& bits);

    /// Component a_i, 1-based.
    bool bit(unsigned i) const;
    BitTuple complement() const;
    std::string toString() const;

    friend bool operator==(const BitTuple&, const BitTuple&) = default;
};

unsigned weight(const BitTuple& t) noexcept;
unsigned distance(const BitTuple& s, const BitTuple& t);
BitTuple meet(const BitTuple& s, const BitTuple& t);
BitTuple join(const BitTuple& s, const BitTuple& t);
bool leq(const BitTuple& s, const BitTuple& t);
/// Characteristic tuple of S (1-based indices).
BitTuple charTuple(unsigned n, const std::set<unsigned>& S);
BitTuple zeroTuple(unsigned n);
BitTuple oneTuple(unsigned n);

/*! \brief Boolean function of positive arity with a bit-packed truth table.

  Index i of the table holds the value at the tuple whose a1-most-significant
  encoding is i. Bit i lives in word i/64 at bit position i%64; unused bits of
  a short table are always zero.
*/
class BooleanFunction {
public:
    BooleanFunction();
    explicit BooleanFunction(unsigned arity, bool value = false);
    BooleanFunction(unsigned arity, std::vector<std::uint64_t> words);

    static BooleanFunction fromWord(unsigned arity, std::uint64_t word);
    static BooleanFunction fromBits(unsigned arity, const std::vector<int>& bits);
    static BooleanFunction fromPredicate(unsigned arity,
                                         const std::function<bool(std::uint64_t)>& pred);

    static BooleanFunction projection(unsigned arity, unsigned i);
    static BooleanFunction negatedProjection(unsigned arity, unsigned i);
    static BooleanFunction constant(unsigned arity, bool value);
    static BooleanFunction conjunction(unsigned arity);
    static BooleanFunction disjunction(unsigned arity);
    static BooleanFunction parity(unsigned arity);

    unsigned arity() const noexcept { return arity_; }
    std::uint64_t tableSize() const noexcept { return std::uint64_t{1} << arity_; }
    const std::vector<std::uint64_t>& words() const noexcept { return words_; }
    std::uint64_t word0() const noexcept { return words_[0]; }

    bool operator[](std::uint64_t idx) const noexcept {
        return (words_[idx >> 6] >> (idx & 63)) & 1u;
    }
    bool at(std::uint64_t idx) const;
    void set(std::uint64_t idx, bool v);

    std::uint64_t countTrue() const noexcept;
    bool isConstant() const noexcept;
    bool isConstant(bool v) const noexcept;
    std::vector<std::uint64_t> truePoints() const;
    std::vector<std::uint64_t> falsePoints() const;
    /// True if the function depends on argument i (1-based).
    bool isEssential(unsigned i) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) noexcept {
        return a.arity_ == b.arity_ && a.words_ == b.words_;
    }
    /// Canonical order: arity, then table bits lexicographically from index 0.
    friend std::strong_ordering operator<=>(const BooleanFunction& a,
                                            const BooleanFunction& b) noexcept;

private:
    unsigned arity_;
    std::vector<std::uint64_t> words_;
};

struct BooleanFunctionHash {
    std::size_t operator()(const BooleanFunction& f) const noexcept { return f.hash(); }
};

bool evaluate(const BooleanFunction& f, const BitTuple& t);
BooleanFunction compose(const BooleanFunction& f, const std::vector<BooleanFunction>& gs);
BooleanFunction negate(const BooleanFunction& f);
BooleanFunction innerNegate(const BooleanFunction& f);
BooleanFunction dual(const BooleanFunction& f);
bool isMinorant(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction meet(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction join(const BooleanFunction& f, const BooleanFunction& g);
unsigned altNumber(const BooleanFunction& f);

BooleanFunction parse(std::string_view text);
std::string format(const BooleanFunction& f);
std::string formatHex(const BooleanFunction& f);

/*! \brief Precomputed outer function for repeated bit-sliced composition.

  The composite is the OR, over the true points t of the outer function, of the
  AND of g_i or ~g_i according to t_i. When the outer function has more true
  points than false points the false points are used and the result complemented.
*/
class ComposePlan {
public:
    explicit ComposePlan(const BooleanFunction& outer);

    unsigned arity() const noexcept { return arity_; }
    bool complemented() const noexcept { return complemented_; }
    const std::vector<std::uint64_t>& points() const noexcept { return points_; }
    /// Literal polarity of argument i (0-based) in term t.
    bool polarity(std::size_t t, unsigned i) const noexcept {
        return (points_[t] >> (arity_ - 1 - i)) & 1u;
    }

    /// inner[i] points at `words` words of the i-th inner table.
    void apply(const std::uint64_t* const* inner, std::size_t words, std::uint64_t mask,
               std::uint64_t* out) const noexcept;
    std::uint64_t applyWord(const std::uint64_t* inner, std::uint64_t mask) const noexcept;

private:
    unsigned arity_;
    bool complemented_;
    std::vector<std::uint64_t> points_;
};

} // namespace clonoid

template <>
struct std::hash<clonoid::BooleanFunction> {
    std::size_t operator()(const clonoid::BooleanFunction& f) const noexcept { return f.hash(); }
};
