// Arithmetic in R = F2 + uF2 + u^2F2 with u^3 = u, and in the chain ring
// Rw = F2 + wF2 with w^2 = 0. Also the Gray map R -> F2^3, the Lee weight,
// and the elementwise CRT isomorphism R ~ F2 x Rw.

#ifndef QCYC_RING_HPP
#define QCYC_RING_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcyc {

using F2 = std::uint8_t; // values 0/1

// a + u b + u^2 c packed as bits (a = bit 0, b = bit 1, c = bit 2).
class RElem {
public:
    constexpr RElem() = default;
    constexpr RElem(F2 a, F2 b, F2 c)
        : v_(static_cast<std::uint8_t>((a & 1) | ((b & 1) << 1) | ((c & 1) << 2))) {}

    static constexpr RElem zero() { return {}; }
    static constexpr RElem one() { return {1, 0, 0}; }
    static constexpr RElem u() { return {0, 1, 0}; }
    static constexpr RElem u2() { return {0, 0, 1}; }
    static constexpr RElem w() { return {0, 1, 1}; }  // u + u^2
    static constexpr RElem e1() { return {1, 0, 1}; } // 1 + u^2, idempotent
    static constexpr RElem from_bits(unsigned bits) {
        RElem e;
        e.v_ = static_cast<std::uint8_t>(bits & 7);
        return e;
    }

    constexpr F2 a() const { return v_ & 1; }
    constexpr F2 b() const { return (v_ >> 1) & 1; }
    constexpr F2 c() const { return (v_ >> 2) & 1; }
    constexpr std::uint8_t bits() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr RElem operator+(RElem x, RElem y) {
        return from_bits(static_cast<unsigned>(x.v_ ^ y.v_));
    }
    // Product reduced by u^3 = u (so u^4 = u^2).
    friend constexpr RElem operator*(RElem x, RElem y) {
        F2 a = x.a() & y.a();
        F2 b = static_cast<F2>((x.a() & y.b()) ^ (x.b() & y.a()) ^ (x.b() & y.c()) ^ (x.c() & y.b()));
        F2 c = static_cast<F2>((x.a() & y.c()) ^ (x.c() & y.a()) ^ (x.b() & y.b()) ^ (x.c() & y.c()));
        return {a, b, c};
    }
    friend constexpr bool operator==(RElem x, RElem y) = default;

private:
    std::uint8_t v_ = 0;
};

// alpha + beta w with w^2 = 0 (alpha = bit 0, beta = bit 1).
class RwElem {
public:
    constexpr RwElem() = default;
    constexpr RwElem(F2 alpha, F2 beta)
        : v_(static_cast<std::uint8_t>((alpha & 1) | ((beta & 1) << 1))) {}

    static constexpr RwElem zero() { return {}; }
    static constexpr RwElem one() { return {1, 0}; }
    static constexpr RwElem w() { return {0, 1}; }

    constexpr F2 alpha() const { return v_ & 1; }
    constexpr F2 beta() const { return (v_ >> 1) & 1; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr RwElem operator+(RwElem x, RwElem y) {
        return RwElem{static_cast<F2>((x.v_ ^ y.v_) & 1), static_cast<F2>(((x.v_ ^ y.v_) >> 1) & 1)};
    }
    friend constexpr RwElem operator*(RwElem x, RwElem y) {
        return {static_cast<F2>(x.alpha() & y.alpha()),
                static_cast<F2>((x.alpha() & y.beta()) ^ (x.beta() & y.alpha()))};
    }
    friend constexpr bool operator==(RwElem x, RwElem y) = default;

private:
    std::uint8_t v_ = 0;
};

// Gray image of one element: (a, a + c, b).
constexpr std::array<F2, 3> gray(RElem x) {
    return {x.a(), static_cast<F2>(x.a() ^ x.c()), x.b()};
}

constexpr int lee_weight(RElem x) {
    auto g = gray(x);
    return g[0] + g[1] + g[2];
}

struct CrtPair {
    F2 f2;      // image in F2
    RwElem rw;  // image in Rw
    friend constexpr bool operator==(const CrtPair&, const CrtPair&) = default;
};

// x = a + ub + u^2c  |->  (a, (a+b+c) + bw)
constexpr CrtPair crt_split(RElem x) {
    return {x.a(), RwElem{static_cast<F2>(x.a() ^ x.b() ^ x.c()), x.b()}};
}

// (a, A + Bw)  |->  a + Bu + (a+A+B)u^2
constexpr RElem crt_join(F2 f2, RwElem g) {
    return {static_cast<F2>(f2 & 1), g.beta(),
            static_cast<F2>((f2 & 1) ^ g.alpha() ^ g.beta())};
}

using RVec = std::vector<RElem>;
using RwVec = std::vector<RwElem>;

// Gray image of a vector in the elementwise-triple layout
// (a_0, a_0+c_0, b_0, a_1, ...), one triple per coordinate.
std::vector<F2> gray_map(std::span<const RElem> v);

int lee_weight(std::span<const RElem> v);

// Right cyclic shift by one: (c_0,...,c_{n-1}) -> (c_{n-1},c_0,...,c_{n-2}).
RVec shift(std::span<const RElem> v);

RElem r_dot(std::span<const RElem> x, std::span<const RElem> y);
RwElem rw_dot(std::span<const RwElem> x, std::span<const RwElem> y);

// Text format: subset of {"0","1","u","u^2"} joined by '+', e.g. "1+u+u^2".
std::string relem_str(RElem x);
RElem relem_parse(std::string_view text);

} // namespace qcyc

#endif
