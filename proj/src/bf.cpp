#include "clonoid/bf.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>

namespace clonoid {

namespace {

std::atomic<unsigned> g_arityCap{16};

std::uint64_t mix(std::uint64_t x) noexcept {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

void requireSameArity(const BooleanFunction& f, const BooleanFunction& g, const char* where) {
    if (f.arity() != g.arity())
        throw ArityMismatch(std::string(where) + ": arities " + std::to_string(f.arity()) +
                            " and " + std::to_string(g.arity()) + " differ");
}

} // namespace

unsigned arityCap() noexcept { return g_arityCap.load(std::memory_order_relaxed); }

void setArityCap(unsigned cap) {
    if (cap == 0 || cap > kHardArityLimit)
        throw DomainError("arity cap must lie in 1.." + std::to_string(kHardArityLimit));
    g_arityCap.store(cap, std::memory_order_relaxed);
}

void checkArity(unsigned n, const char* where) {
    if (n == 0) throw DomainError(std::string(where) + ": nullary functions are not supported");
    if (n > arityCap())
        throw DomainError(std::string(where) + ": arity " + std::to_string(n) +
                          " exceeds the cap " + std::to_string(arityCap()));
}

// ---------------------------------------------------------------- BitTuple

BitTuple::BitTuple(unsigned w, std::uint64_t idx) : width(w), index(idx) {
    if (w == 0 || w > 63) throw DomainError("tuple width must lie in 1..63");
    if (idx >> w) throw DomainError("tuple index out of range for width");
}

BitTuple BitTuple::fromBits(const std::vector<int>& bits) {
    std::uint64_t idx = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw DomainError("tuple components must be 0 or 1");
        idx = (idx << 1) | static_cast<std::uint64_t>(b);
    }
    return BitTuple(static_cast<unsigned>(bits.size()), idx);
}

bool BitTuple::bit(unsigned i) const {
    if (i == 0 || i > width) throw DomainError("tuple component index out of range");
    return (index >> (width - i)) & 1u;
}

BitTuple BitTuple::complement() const {
    return BitTuple(width, index ^ ((std::uint64_t{1} << width) - 1));
}

std::string BitTuple::toString() const {
    std::string s(width, '0');
    for (unsigned i = 1; i <= width; ++i)
        if (bit(i)) s[i - 1] = '1';
    return s;
}

unsigned weight(const BitTuple& t) noexcept { return static_cast<unsigned>(std::popcount(t.index)); }

unsigned distance(const BitTuple& s, const BitTuple& t) {
    if (s.width != t.width) throw ArityMismatch("distance: tuple widths differ");
    return static_cast<unsigned>(std::popcount(s.index ^ t.index));
}

BitTuple meet(const BitTuple& s, const BitTuple& t) {
    if (s.width != t.width) throw ArityMismatch("meet: tuple widths differ");
    return BitTuple(s.width, s.index & t.index);
}

BitTuple join(const BitTuple& s, const BitTuple& t) {
    if (s.width != t.width) throw ArityMismatch("join: tuple widths differ");
    return BitTuple(s.width, s.index | t.index);
}

bool leq(const BitTuple& s, const BitTuple& t) {
    if (s.width != t.width) throw ArityMismatch("leq: tuple widths differ");
    return (s.index & ~t.index) == 0;
}

BitTuple charTuple(unsigned n, const std::set<unsigned>& S) {
    std::uint64_t idx = 0;
    for (unsigned i : S) {
        if (i == 0 || i > n) throw DomainError("charTuple: index " + std::to_string(i) + " not in 1.." + std::to_string(n));
        idx |= std::uint64_t{1} << (n - i);
    }
    return BitTuple(n, idx);
}

BitTuple zeroTuple(unsigned n) { return BitTuple(n, 0); }
BitTuple oneTuple(unsigned n) { return BitTuple(n, (std::uint64_t{1} << n) - 1); }

// --------------------------------------------------------- BooleanFunction

BooleanFunction::BooleanFunction() : arity_(1), words_(1, 0) {}

BooleanFunction::BooleanFunction(unsigned arity, bool value) : arity_(arity) {
    checkArity(arity, "BooleanFunction");
    words_.assign(wordCount(arity), value ? ~std::uint64_t{0} : 0);
    words_.back() &= tailMask(arity);
}

BooleanFunction::BooleanFunction(unsigned arity, std::vector<std::uint64_t> words)
    : arity_(arity), words_(std::move(words)) {
    checkArity(arity, "BooleanFunction");
    if (words_.size() != wordCount(arity)) throw DomainError("table length does not match arity");
    words_.back() &= tailMask(arity);
}

BooleanFunction BooleanFunction::fromWord(unsigned arity, std::uint64_t word) {
    if (arity > 6) throw DomainError("fromWord: arity above 6 needs several words");
    return BooleanFunction(arity, std::vector<std::uint64_t>{word});
}

BooleanFunction BooleanFunction::fromBits(unsigned arity, const std::vector<int>& bits) {
    BooleanFunction f(arity);
    if (bits.size() != f.tableSize()) throw DomainError("fromBits: table length must be 2^arity");
    for (std::size_t i = 0; i < bits.size(); ++i) f.set(i, bits[i] != 0);
    return f;
}

BooleanFunction BooleanFunction::fromPredicate(unsigned arity,
                                               const std::function<bool(std::uint64_t)>& pred) {
    BooleanFunction f(arity);
    for (std::uint64_t i = 0; i < f.tableSize(); ++i)
        if (pred(i)) f.words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return f;
}

BooleanFunction BooleanFunction::projection(unsigned arity, unsigned i) {
    if (i == 0 || i > arity) throw DomainError("projection index out of range");
    return fromPredicate(arity, [&](std::uint64_t a) { return (a >> (arity - i)) & 1u; });
}

BooleanFunction BooleanFunction::negatedProjection(unsigned arity, unsigned i) {
    return negate(projection(arity, i));
}

BooleanFunction BooleanFunction::constant(unsigned arity, bool value) {
    return BooleanFunction(arity, value);
}

BooleanFunction BooleanFunction::conjunction(unsigned arity) {
    const std::uint64_t top = (std::uint64_t{1} << arity) - 1;
    return fromPredicate(arity, [&](std::uint64_t a) { return a == top; });
}

BooleanFunction BooleanFunction::disjunction(unsigned arity) {
    return fromPredicate(arity, [](std::uint64_t a) { return a != 0; });
}

BooleanFunction BooleanFunction::parity(unsigned arity) {
    return fromPredicate(arity, [](std::uint64_t a) { return std::popcount(a) & 1; });
}

bool BooleanFunction::at(std::uint64_t idx) const {
    if (idx >= tableSize()) throw DomainError("table index out of range");
    return (*this)[idx];
}

void BooleanFunction::set(std::uint64_t idx, bool v) {
    if (idx >= tableSize()) throw DomainError("table index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    if (v)
        words_[idx >> 6] |= bit;
    else
        words_[idx >> 6] &= ~bit;
}

std::uint64_t BooleanFunction::countTrue() const noexcept {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

bool BooleanFunction::isConstant(bool v) const noexcept {
    return v ? countTrue() == tableSize() : countTrue() == 0;
}

bool BooleanFunction::isConstant() const noexcept { return isConstant(false) || isConstant(true); }

std::vector<std::uint64_t> BooleanFunction::truePoints() const {
    std::vector<std::uint64_t> pts;
    for (std::size_t w = 0; w < words_.size(); ++w)
        for (std::uint64_t x = words_[w]; x; x &= x - 1)
            pts.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(x)));
    return pts;
}

std::vector<std::uint64_t> BooleanFunction::falsePoints() const {
    std::vector<std::uint64_t> pts;
    for (std::uint64_t i = 0; i < tableSize(); ++i)
        if (!(*this)[i]) pts.push_back(i);
    return pts;
}

bool BooleanFunction::isEssential(unsigned i) const {
    if (i == 0 || i > arity_) throw DomainError("argument index out of range");
    const std::uint64_t flip = std::uint64_t{1} << (arity_ - i);
    for (std::uint64_t a = 0; a < tableSize(); ++a)
        if (!(a & flip) && (*this)[a] != (*this)[a | flip]) return true;
    return false;
}

std::size_t BooleanFunction::hash() const noexcept {
    std::uint64_t h = mix(arity_ + 0x9e3779b97f4a7c15ULL);
    for (auto w : words_) h = mix(h ^ (w + 0x9e3779b97f4a7c15ULL + (h << 6)));
    return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const BooleanFunction& a, const BooleanFunction& b) noexcept {
    if (a.arity_ != b.arity_) return a.arity_ <=> b.arity_;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
        const std::uint64_t x = a.words_[w] ^ b.words_[w];
        if (!x) continue;
        const std::uint64_t low = x & (~x + 1);
        // The first differing index carries 0 in the smaller table.
        return (a.words_[w] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

// --------------------------------------------------------------- operations

bool evaluate(const BooleanFunction& f, const BitTuple& t) {
    if (t.width != f.arity())
        throw ArityMismatch("evaluate: tuple width " + std::to_string(t.width) +
                            " differs from arity " + std::to_string(f.arity()));
    return f[t.index];
}

BooleanFunction compose(const BooleanFunction& f, const std::vector<BooleanFunction>& gs) {
    if (gs.size() != f.arity())
        throw ArityMismatch("compose: expected " + std::to_string(f.arity()) + " inner functions, got " +
                            std::to_string(gs.size()));
    const unsigned m = gs.front().arity();
    for (const auto& g : gs)
        if (g.arity() != m) throw ArityMismatch("compose: inner functions must share one arity");
    std::vector<const std::uint64_t*> inner;
    inner.reserve(gs.size());
    for (const auto& g : gs) inner.push_back(g.words().data());
    std::vector<std::uint64_t> out(wordCount(m));
    ComposePlan(f).apply(inner.data(), out.size(), tailMask(m), out.data());
    return BooleanFunction(m, std::move(out));
}

BooleanFunction negate(const BooleanFunction& f) {
    std::vector<std::uint64_t> w = f.words();
    for (auto& x : w) x = ~x;
    return BooleanFunction(f.arity(), std::move(w));
}

BooleanFunction innerNegate(const BooleanFunction& f) {
    const std::uint64_t top = f.tableSize() - 1;
    return BooleanFunction::fromPredicate(f.arity(), [&](std::uint64_t a) { return f[a ^ top]; });
}

BooleanFunction dual(const BooleanFunction& f) { return negate(innerNegate(f)); }

bool isMinorant(const BooleanFunction& f, const BooleanFunction& g) {
    requireSameArity(f, g, "isMinorant");
    for (std::size_t w = 0; w < f.words().size(); ++w)
        if (f.words()[w] & ~g.words()[w]) return false;
    return true;
}

BooleanFunction meet(const BooleanFunction& f, const BooleanFunction& g) {
    requireSameArity(f, g, "meet");
    std::vector<std::uint64_t> w = f.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= g.words()[i];
    return BooleanFunction(f.arity(), std::move(w));
}

BooleanFunction join(const BooleanFunction& f, const BooleanFunction& g) {
    requireSameArity(f, g, "join");
    std::vector<std::uint64_t> w = f.words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= g.words()[i];
    return BooleanFunction(f.arity(), std::move(w));
}

unsigned altNumber(const BooleanFunction& f) {
    // best[a][c]: longest alternating chain inside the down-set of a ending in value c, -1 if none.
    const unsigned n = f.arity();
    const std::uint64_t size = f.tableSize();
    std::vector<int> best(2 * size, -1);
    std::vector<std::uint64_t> order(size);
    for (std::uint64_t a = 0; a < size; ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });
    int result = 0;
    for (std::uint64_t a : order) {
        int below[2] = {-1, -1};
        for (unsigned i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if (!(a & bit)) continue;
            const std::uint64_t c = a ^ bit;
            below[0] = std::max(below[0], best[2 * c]);
            below[1] = std::max(below[1], best[2 * c + 1]);
        }
        const int v = f[a] ? 1 : 0;
        const int here = below[1 - v] >= 0 ? below[1 - v] + 1 : 0;
        best[2 * a + v] = std::max(below[v], here);
        best[2 * a + 1 - v] = below[1 - v];
        result = std::max(result, best[2 * a + v]);
    }
    return static_cast<unsigned>(result);
}

BooleanFunction parse(std::string_view text) {
    std::size_t pos = 0;
    unsigned n = 0;
    if (text.empty() || !std::isdigit(static_cast<unsigned char>(text[0])))
        throw ParseError("expected arity digits", 0);
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        n = n * 10 + static_cast<unsigned>(text[pos] - '0');
        if (n > 1000) throw ParseError("arity too large", pos);
        ++pos;
    }
    if (n == 0) throw ParseError("arity must be positive", 0);
    if (n > arityCap())
        throw ParseError("arity " + std::to_string(n) + " exceeds the cap " + std::to_string(arityCap()), 0);
    if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' after arity", pos);
    ++pos;
    BooleanFunction f(n);
    const std::uint64_t size = f.tableSize();
    if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
        ++pos;
        const std::uint64_t digits = (size + 3) / 4;
        if (text.size() - pos != digits)
            throw ParseError("expected " + std::to_string(digits) + " hex digits, got " +
                                 std::to_string(text.size() - pos),
                             std::min(text.size(), pos + digits));
        for (std::uint64_t d = 0; d < digits; ++d) {
            const char c = text[pos + d];
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'A' && c <= 'F')
                v = c - 'A' + 10;
            else if (c >= 'a' && c <= 'f')
                v = c - 'a' + 10;
            else
                throw ParseError(std::string("invalid hex digit '") + c + "'", pos + d);
            for (int b = 0; b < 4; ++b) {
                const bool bit = (v >> (3 - b)) & 1;
                const std::uint64_t idx = 4 * d + static_cast<std::uint64_t>(b);
                if (idx < size)
                    f.set(idx, bit);
                else if (bit)
                    throw ParseError("nonzero padding bit in hex table", pos + d);
            }
        }
        return f;
    }
    if (text.size() - pos != size)
        throw ParseError("expected " + std::to_string(size) + " table bits, got " +
                             std::to_string(text.size() - pos),
                         text.size() - pos < size ? text.size() : pos + size);
    for (std::uint64_t i = 0; i < size; ++i) {
        const char c = text[pos + i];
        if (c != '0' && c != '1') throw ParseError(std::string("invalid table bit '") + c + "'", pos + i);
        f.set(i, c == '1');
    }
    return f;
}

std::string format(const BooleanFunction& f) {
    std::string s = std::to_string(f.arity()) + ":";
    s.reserve(s.size() + f.tableSize());
    for (std::uint64_t i = 0; i < f.tableSize(); ++i) s.push_back(f[i] ? '1' : '0');
    return s;
}

std::string formatHex(const BooleanFunction& f) {
    static const char* hex = "0123456789ABCDEF";
    std::string s = std::to_string(f.arity()) + ":x";
    const std::uint64_t size = f.tableSize();
    for (std::uint64_t d = 0; d < (size + 3) / 4; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            const std::uint64_t idx = 4 * d + static_cast<std::uint64_t>(b);
            if (idx < size && f[idx]) v |= 1 << (3 - b);
        }
        s.push_back(hex[v]);
    }
    return s;
}

// -------------------------------------------------------------- ComposePlan

ComposePlan::ComposePlan(const BooleanFunction& outer) : arity_(outer.arity()) {
    const std::uint64_t t = outer.countTrue();
    complemented_ = 2 * t > outer.tableSize();
    points_ = complemented_ ? outer.falsePoints() : outer.truePoints();
}

void ComposePlan::apply(const std::uint64_t* const* inner, std::size_t words, std::uint64_t mask,
                        std::uint64_t* out) const noexcept {
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t acc = 0;
        for (std::size_t t = 0; t < points_.size(); ++t) {
            std::uint64_t term = ~std::uint64_t{0};
            for (unsigned i = 0; i < arity_ && term; ++i)
                term &= polarity(t, i) ? inner[i][w] : ~inner[i][w];
            acc |= term;
        }
        out[w] = complemented_ ? ~acc : acc;
    }
    out[words - 1] &= mask;
}

std::uint64_t ComposePlan::applyWord(const std::uint64_t* inner, std::uint64_t mask) const noexcept {
    std::uint64_t acc = 0;
    for (std::size_t t = 0; t < points_.size(); ++t) {
        std::uint64_t term = ~std::uint64_t{0};
        for (unsigned i = 0; i < arity_ && term; ++i) term &= polarity(t, i) ? inner[i] : ~inner[i];
        acc |= term;
    }
    return (complemented_ ? ~acc : acc) & mask;
}

} // namespace clonoid
