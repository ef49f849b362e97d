// Bit-packed vectors for the linear algebra underneath codes over R, Rw and
// F2, plus a shared row-reduction engine. Supports lengths n <= 63.
//
// An R-vector of length n is stored as its Gray image in the three-block
// view: block 0 holds the a-coordinates, block 1 the a+c sums, block 2 the
// b-coordinates; bit i of a block is coordinate i. Lee weight is then plain
// popcount and the cyclic coordinate shift rotates each block by one.

#ifndef QCYC_RWORD_HPP
#define QCYC_RWORD_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qcyc/ring.hpp"

namespace qcyc {

constexpr int kMaxN = 63;

namespace detail {
constexpr std::uint64_t rotl_bits(std::uint64_t v, int n) {
    // rotate the low n bits left by one
    std::uint64_t mask = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    return ((v << 1) | (v >> (n - 1))) & mask;
}
} // namespace detail

struct RWord {
    std::uint64_t a = 0, ac = 0, b = 0;

    static constexpr int kBlocks = 3;

    friend constexpr bool operator==(const RWord&, const RWord&) = default;
    friend constexpr bool operator<(const RWord& x, const RWord& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.ac != y.ac) return x.ac < y.ac;
        return x.b < y.b;
    }
    RWord& operator^=(const RWord& o) {
        a ^= o.a;
        ac ^= o.ac;
        b ^= o.b;
        return *this;
    }
    friend RWord operator^(RWord x, const RWord& y) { return x ^= y; }

    bool is_zero() const { return (a | ac | b) == 0; }
    bool bit(int k, int n) const {
        const std::uint64_t* blocks[3] = {&a, &ac, &b};
        return (*blocks[k / n] >> (k % n)) & 1;
    }
    void set(int k, int n, bool v) {
        std::uint64_t* blocks[3] = {&a, &ac, &b};
        std::uint64_t m = 1ULL << (k % n);
        if (v) *blocks[k / n] |= m;
        else *blocks[k / n] &= ~m;
    }

    int lee_weight() const { return std::popcount(a) + std::popcount(ac) + std::popcount(b); }

    RWord rotated(int n) const {
        return {detail::rotl_bits(a, n), detail::rotl_bits(ac, n), detail::rotl_bits(b, n)};
    }
    // Coordinatewise multiplication by u and u^2, as linear maps on the blocks.
    RWord times_u() const { return {0, b, ac}; }
    RWord times_u2() const { return {0, ac, b}; }

    static bool parity_and(const RWord& x, const RWord& y) {
        return (std::popcount(x.a & y.a) + std::popcount(x.ac & y.ac) + std::popcount(x.b & y.b)) & 1;
    }

    static RWord from_vec(std::span<const RElem> v);
    RVec to_vec(int n) const;
};

// The three F2 components of the R-inner product x.y (coefficients of
// 1, u, u^2), written on the Gray block coordinates.
inline bool r_dot_comp1(const RWord& x, const RWord& y) {
    return std::popcount(x.a & y.a) & 1;
}
inline bool r_dot_comp_u(const RWord& x, const RWord& y) {
    return (std::popcount(x.ac & y.b) + std::popcount(x.b & y.ac)) & 1;
}
inline bool r_dot_comp_u2(const RWord& x, const RWord& y) {
    return (std::popcount(x.a & y.a) + std::popcount(x.ac & y.ac) + std::popcount(x.b & y.b)) & 1;
}
inline bool r_orthogonal(const RWord& x, const RWord& y) {
    return !r_dot_comp1(x, y) && !r_dot_comp_u(x, y) && !r_dot_comp_u2(x, y);
}

struct RwWord {
    std::uint64_t al = 0, be = 0;

    static constexpr int kBlocks = 2;

    friend constexpr bool operator==(const RwWord&, const RwWord&) = default;
    friend constexpr bool operator<(const RwWord& x, const RwWord& y) {
        if (x.al != y.al) return x.al < y.al;
        return x.be < y.be;
    }
    RwWord& operator^=(const RwWord& o) {
        al ^= o.al;
        be ^= o.be;
        return *this;
    }
    friend RwWord operator^(RwWord x, const RwWord& y) { return x ^= y; }

    bool is_zero() const { return (al | be) == 0; }
    bool bit(int k, int n) const { return ((k < n ? al : be) >> (k % n)) & 1; }
    void set(int k, int n, bool v) {
        std::uint64_t& blk = k < n ? al : be;
        std::uint64_t m = 1ULL << (k % n);
        if (v) blk |= m;
        else blk &= ~m;
    }
    RwWord rotated(int n) const {
        return {detail::rotl_bits(al, n), detail::rotl_bits(be, n)};
    }
    RwWord times_w() const { return {0, al}; }

    static bool parity_and(const RwWord& x, const RwWord& y) {
        return (std::popcount(x.al & y.al) + std::popcount(x.be & y.be)) & 1;
    }

    static RwWord from_vec(std::span<const RwElem> v);
    RwVec to_vec(int n) const;
};

inline bool rw_dot_comp1(const RwWord& x, const RwWord& y) {
    return std::popcount(x.al & y.al) & 1;
}
inline bool rw_dot_comp_w(const RwWord& x, const RwWord& y) {
    return (std::popcount(x.al & y.be) + std::popcount(x.be & y.al)) & 1;
}
inline bool rw_orthogonal(const RwWord& x, const RwWord& y) {
    return !rw_dot_comp1(x, y) && !rw_dot_comp_w(x, y);
}

struct BinWord {
    std::uint64_t v = 0;

    static constexpr int kBlocks = 1;

    friend constexpr bool operator==(const BinWord&, const BinWord&) = default;
    friend constexpr bool operator<(const BinWord& x, const BinWord& y) { return x.v < y.v; }
    BinWord& operator^=(const BinWord& o) {
        v ^= o.v;
        return *this;
    }
    friend BinWord operator^(BinWord x, const BinWord& y) { return x ^= y; }

    bool is_zero() const { return v == 0; }
    bool bit(int k, int) const { return (v >> k) & 1; }
    void set(int k, int, bool b) {
        if (b) v |= 1ULL << k;
        else v &= ~(1ULL << k);
    }
    BinWord rotated(int n) const { return {detail::rotl_bits(v, n)}; }

    static bool parity_and(const BinWord& x, const BinWord& y) {
        return std::popcount(x.v & y.v) & 1;
    }
};

// A canonical (reduced row echelon) basis of an F2 span. Pivot order is
// ascending bit index, i.e. a-coordinates first, then the a+c sums, then the
// b-coordinates, each by ascending coordinate; that makes every basis and
// every comparison of spans deterministic.
template <class Row>
class Gf2Span {
public:
    Gf2Span(int n, int width) : n_(n), width_(width) {}

    int n() const { return n_; }
    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Row reduce(Row r) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (r.bit(pivots_[i], n_)) r ^= rows_[i];
        return r;
    }

    bool contains(const Row& r) const { return reduce(r).is_zero(); }

    // Returns true if the row enlarged the span.
    bool insert(Row r) {
        r = reduce(r);
        if (r.is_zero()) return false;
        int p = 0;
        while (!r.bit(p, n_)) ++p;
        // clear the new pivot column in existing rows, keep rows pivot-sorted
        for (auto& row : rows_)
            if (row.bit(p, n_)) row ^= r;
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), r);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    bool contains_span(const Gf2Span& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const Gf2Span& x, const Gf2Span& y) {
        return x.n_ == y.n_ && x.width_ == y.width_ && x.rows_ == y.rows_;
    }

    // Solve L_j(x) = 0 for every functional mask: L_j(x) = parity(x & mask_j).
    // The result is the canonical basis of the solution space.
    static Gf2Span null_space(int n, int width, std::span<const Row> masks) {
        Gf2Span constraints(n, width);
        for (const auto& m : masks) constraints.insert(m);
        Gf2Span out(n, width);
        std::vector<bool> is_pivot(static_cast<std::size_t>(width), false);
        for (int p : constraints.pivots_) is_pivot[static_cast<std::size_t>(p)] = true;
        for (int j = 0; j < width; ++j) {
            if (is_pivot[static_cast<std::size_t>(j)]) continue;
            Row v{};
            v.set(j, n, true);
            for (std::size_t i = 0; i < constraints.rows_.size(); ++i)
                if (constraints.rows_[i].bit(j, n))
                    v.set(constraints.pivots_[i], n, true);
            out.insert(v);
        }
        return out;
    }

private:
    int n_;
    int width_;
    std::vector<Row> rows_;
    std::vector<int> pivots_;
};

using RSpan = Gf2Span<RWord>;
using RwSpan = Gf2Span<RwWord>;
using BinSpan = Gf2Span<BinWord>;

} // namespace qcyc

#endif
