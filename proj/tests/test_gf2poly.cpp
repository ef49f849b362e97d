#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qcyc/gf2poly.hpp"

using namespace qcyc;

namespace {

BinPoly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<std::uint8_t> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : coeffs) c = static_cast<std::uint8_t>(rng() & 1);
    return BinPoly::from_coeffs(std::move(coeffs));
}

} // namespace

TEST_CASE("parse and print") {
    CHECK(BinPoly::parse("x^2+x+1").str() == "x^2+x+1");
    CHECK(BinPoly::parse("1+x+x^2").str() == "x^2+x+1"); // any term order
    CHECK(BinPoly::parse("111").str() == "x^2+x+1");     // ascending coefficient string
    CHECK(BinPoly::parse("11").str() == "x+1");
    CHECK(BinPoly::parse("0") == BinPoly::zero());
    CHECK(BinPoly::parse("1") == BinPoly::one());
    CHECK(BinPoly::parse("x") == BinPoly::x());
    CHECK(BinPoly::parse(" x^3 + x + 1 ").str() == "x^3+x+1");
    CHECK_THROWS_AS(BinPoly::parse("y+1"), std::invalid_argument);
    CHECK_THROWS_AS(BinPoly::parse("x^-2"), std::invalid_argument);
    CHECK_THROWS_AS(BinPoly::parse(""), std::invalid_argument);

    // round trip through both formats
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BinPoly p = random_poly(rng, 20);
        CHECK(BinPoly::parse(p.str()) == p);
    }
}

TEST_CASE("multiplication") {
    auto xp1 = BinPoly::parse("x+1");
    CHECK(xp1 * BinPoly::parse("x^2+x+1") == BinPoly::parse("x^3+1"));
    CHECK(xp1 * BinPoly::one() == xp1);
    CHECK(xp1 * xp1 == BinPoly::parse("x^2+1"));
    CHECK(xp1 * BinPoly::zero() == BinPoly::zero());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        BinPoly p = random_poly(rng, 15), q = random_poly(rng, 15);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("division with remainder") {
    auto [q1, r1] = BinPoly::divrem(BinPoly::parse("x^3+1"), BinPoly::parse("x+1"));
    CHECK(q1 == BinPoly::parse("x^2+x+1"));
    CHECK(r1.is_zero());

    auto p = BinPoly::parse("x^4+x+1");
    auto [q2, r2] = BinPoly::divrem(p, p);
    CHECK(q2 == BinPoly::one());
    CHECK(r2.is_zero());

    auto [q3, r3] = BinPoly::divrem(BinPoly::parse("x^5+1"), BinPoly::parse("x+1"));
    CHECK(q3 == BinPoly::parse("x^4+x^3+x^2+x+1"));
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(BinPoly::divrem(p, BinPoly::zero()), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        BinPoly a = random_poly(rng, 20), d = random_poly(rng, 10);
        if (d.is_zero()) continue;
        auto [q, r] = BinPoly::divrem(a, d);
        CHECK(q * d + r == a);
        if (!r.is_zero()) CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("gcd") {
    CHECK(BinPoly::gcd(BinPoly::parse("x^3+1"), BinPoly::parse("x+1")) == BinPoly::parse("x+1"));
    CHECK(BinPoly::gcd(BinPoly::parse("x^2+x+1"), BinPoly::parse("x+1")) == BinPoly::one());
    auto p = BinPoly::parse("x^3+x+1");
    CHECK(BinPoly::gcd(p, BinPoly::zero()) == p);
    CHECK_THROWS_AS(BinPoly::gcd(BinPoly::zero(), BinPoly::zero()), std::invalid_argument);
}

TEST_CASE("reciprocal") {
    CHECK(BinPoly::parse("x^2+x+1").reciprocal() == BinPoly::parse("x^2+x+1"));
    CHECK(BinPoly::parse("x^3+x+1").reciprocal() == BinPoly::parse("x^3+x^2+1"));
    CHECK(BinPoly::parse("x+1").reciprocal() == BinPoly::parse("x+1"));
    // h(0) = 0 drops degree after reversal
    CHECK(BinPoly::parse("x^2+x").reciprocal() == BinPoly::parse("x+1"));
    CHECK_THROWS_AS(BinPoly::zero().reciprocal(), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        BinPoly p = random_poly(rng, 20);
        if (!p.coeff(0)) continue; // involution needs h(0) = 1
        CHECK(p.reciprocal().reciprocal() == p);
    }
}

TEST_CASE("zero polynomial degree sentinel") {
    CHECK(BinPoly::zero().degree() == BinPoly::kZeroDegree);
    CHECK(BinPoly::kZeroDegree < -1000000);
    CHECK(BinPoly::one().degree() == 0);
}

TEST_CASE("factor x^n-1") {
    auto f3 = factor_xn_minus_1(3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0] == BinPoly::parse("x+1"));
    CHECK(f3[1] == BinPoly::parse("x^2+x+1"));

    auto f5 = factor_xn_minus_1(5);
    REQUIRE(f5.size() == 2);
    CHECK(f5[0] == BinPoly::parse("x+1"));
    CHECK(f5[1] == BinPoly::parse("x^4+x^3+x^2+x+1"));

    auto f7 = factor_xn_minus_1(7);
    REQUIRE(f7.size() == 3);
    CHECK(f7[0] == BinPoly::parse("x+1"));
    CHECK(f7[1] == BinPoly::parse("x^3+x+1"));
    CHECK(f7[2] == BinPoly::parse("x^3+x^2+1"));
    // irreducibility of the degree-3 factors: no divisor of degree 1
    for (int i = 1; i <= 2; ++i)
        for (std::uint64_t c = 2; c < 4; ++c) {
            BinPoly d = BinPoly::from_coeffs({static_cast<std::uint8_t>(c & 1), 1});
            CHECK_FALSE(d.divides(f7[static_cast<std::size_t>(i)]));
        }

    CHECK(factor_xn_minus_1(1) == std::vector<BinPoly>{BinPoly::parse("x+1")});
    CHECK_THROWS_AS(factor_xn_minus_1(4), std::invalid_argument);
    CHECK_THROWS_AS(factor_xn_minus_1(0), std::invalid_argument);
    CHECK_THROWS_AS(factor_xn_minus_1(-3), std::invalid_argument);
}

TEST_CASE("factorization properties for all odd n up to 63") {
    for (int n = 1; n <= 63; n += 2) {
        auto factors = factor_xn_minus_1(n);
        BinPoly product = BinPoly::one();
        for (const auto& f : factors) product = product * f;
        CHECK(product == BinPoly::xn_minus_1(n));
        // pairwise coprime (square-free since n is odd)
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i + 1; j < factors.size(); ++j)
                CHECK(BinPoly::gcd(factors[i], factors[j]) == BinPoly::one());
        // degrees match the 2-cyclotomic coset sizes
        auto cosets = cyclotomic_cosets_mod2(n);
        CHECK(factors.size() == cosets.size());
    }
}

TEST_CASE("divisor lattice of x^n-1") {
    auto d3 = divisors_xn1(3);
    REQUIRE(d3.size() == 4);
    CHECK(d3[0] == BinPoly::one());
    CHECK(d3[1] == BinPoly::parse("x+1"));
    CHECK(d3[2] == BinPoly::parse("x^2+x+1"));
    CHECK(d3[3] == BinPoly::parse("x^3+1"));

    auto d1 = divisors_xn1(1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == BinPoly::one());
    CHECK(d1[1] == BinPoly::parse("x+1"));

    CHECK(divisors_xn1(5).size() == 4);
    CHECK(divisors_xn1(7).size() == 8);
    CHECK(divisors_xn1(15).size() == 32);

    for (int n : {3, 5, 7, 9, 15}) {
        auto divisors = divisors_xn1(n);
        auto factors = factor_xn_minus_1(n);
        CHECK(divisors.size() == (1u << factors.size()));
        for (const auto& d : divisors) CHECK(d.divides(BinPoly::xn_minus_1(n)));
    }
}
