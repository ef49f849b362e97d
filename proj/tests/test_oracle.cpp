#include <doctest.h>

#include <random>

#include "qcyc/oracle.hpp"

using namespace qcyc;

namespace {

CodeSpec spec_of(int n, const char* g1, const char* a1, const char* g2) {
    return {n, BinPoly::parse(g1), BinPoly::parse(a1), BinPoly::parse(g2)};
}

RVec vec_from_bits(unsigned bits, int n) {
    RVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = RElem::from_bits((bits >> (3 * i)) & 7);
    return v;
}

} // namespace

TEST_CASE("layout permutation round trips") {
    std::vector<F2> triple = {1, 1, 0, 0, 0, 1, 0, 1, 0};
    std::vector<F2> block = triple_to_block(triple);
    CHECK(block == std::vector<F2>{1, 0, 0, 1, 0, 1, 0, 1, 0});
    CHECK(block_to_triple(block) == triple);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 20;
        std::vector<F2> w(3 * n);
        for (auto& b : w) b = static_cast<F2>(rng() & 1);
        CHECK(block_to_triple(triple_to_block(w)) == w);
        CHECK(triple_to_block(block_to_triple(w)) == w);
    }
    std::vector<F2> bad(4, 0);
    CHECK_THROWS_AS(triple_to_block(bad), std::invalid_argument);
    CHECK_THROWS_AS(block_to_triple(bad), std::invalid_argument);
    CHECK_THROWS_AS(tau_map(bad), std::invalid_argument);
}

TEST_CASE("tau shifts each block cyclically") {
    std::vector<F2> w = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(tau_map(w) == std::vector<F2>{0, 1, 0, 0, 0, 1, 1, 0, 0});

    // tau^n is the identity
    std::mt19937_64 rng(41);
    for (int n : {3, 5, 7}) {
        std::vector<F2> v(static_cast<std::size_t>(3 * n));
        for (auto& b : v) b = static_cast<F2>(rng() & 1);
        std::vector<F2> cur = v;
        for (int k = 0; k < n; ++k) cur = tau_map(cur);
        CHECK(cur == v);
    }
}

TEST_CASE("Gray map intertwines the cyclic shift with tau") {
    // exhaustive at n = 3: all 512 vectors
    for (unsigned bits = 0; bits < 512; ++bits)
        CHECK(check_shift_commutation(vec_from_bits(bits, 3)));

    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 15);
        RVec v(static_cast<std::size_t>(n));
        for (auto& e : v) e = RElem::from_bits(static_cast<unsigned>(rng() & 7));
        CHECK(check_shift_commutation(v));
    }
}

TEST_CASE("exhaustive dual agrees with the linear-algebra dual") {
    std::vector<CodeSpec> specs = {
        spec_of(3, "x+1", "1", "x+1"),
        spec_of(3, "1", "1", "1"),
        spec_of(3, "x^3+1", "x^3+1", "x^3+1"),
        spec_of(3, "x^2+x+1", "1", "x+1"),
        spec_of(5, "x+1", "1", "x+1"),
        spec_of(5, "x^4+x^3+x^2+x+1", "1", "x^5+1"),
        spec_of(7, "x^3+x+1", "x^3+x+1", "x^3+x^2+1"),
    };
    for (const auto& s : specs) {
        CodeBasis c = span_basis(s);
        CHECK(exhaustive_dual(c) == dual_code(c));
    }
    CHECK_THROWS_AS(exhaustive_dual(span_basis(spec_of(9, "1", "1", "1"))),
                    std::invalid_argument);
}

TEST_CASE("code spans are quasi-cyclic of index 3, arbitrary spans are not") {
    for (const auto& s : {spec_of(3, "x+1", "1", "x+1"), spec_of(5, "x+1", "1", "x^4+x^3+x^2+x+1"),
                          spec_of(7, "x^3+x+1", "1", "x+1")})
        CHECK(check_quasi_cyclic(span_basis(s)));

    RSpan single(3, 9);
    RVec v = {RElem::one(), RElem::zero(), RElem::zero()};
    single.insert(RWord::from_vec(v));
    CHECK_FALSE(check_quasi_cyclic(single));
}

TEST_CASE("self-orthogonality transfers through the Gray map") {
    // duals of dual-containing codes are self-orthogonal
    for (const auto& s : {spec_of(3, "x+1", "1", "1"), spec_of(3, "x^2+x+1", "1", "1"),
                          spec_of(7, "x+1", "1", "x^3+x+1"),
                          spec_of(7, "x^3+x+1", "x^3+x+1", "x^3+x+1")}) {
        DualBasis d = dual_code(span_basis(s));
        CHECK(is_self_orthogonal(d));
        CHECK(check_gray_self_orthogonal(d));
    }

    // the span of (u+u^2) at length 1 is self-orthogonal
    RSpan wspan(1, 3);
    RVec v = {RElem::w()};
    wspan.insert(RWord::from_vec(v));
    CHECK(is_self_orthogonal(wspan));
    CHECK(check_gray_self_orthogonal(wspan));

    // the whole space is not, and the check refuses to run on it
    CodeBasis whole = span_basis(spec_of(3, "1", "1", "1"));
    CHECK_FALSE(is_self_orthogonal(whole));
    CHECK_THROWS_AS(check_gray_self_orthogonal(whole), std::domain_error);
}

TEST_CASE("exhaustive Lee distance agrees with the span walk") {
    std::vector<CodeSpec> specs = {
        spec_of(3, "x+1", "1", "x+1"),
        spec_of(3, "1", "1", "1"),
        spec_of(3, "x^2+x+1", "1", "x^2+x+1"),
        spec_of(5, "x+1", "1", "x+1"),
        spec_of(5, "x^4+x^3+x^2+x+1", "x^4+x^3+x^2+x+1", "x+1"),
    };
    for (const auto& s : specs) {
        CodeBasis c = span_basis(s);
        LeeDistance d = min_lee_distance(c);
        CHECK(d.exact);
        CHECK(exhaustive_min_lee_weight(c) == d.value);
    }
    CHECK_THROWS_AS(exhaustive_min_lee_weight(span_basis(spec_of(3, "x^3+1", "x^3+1", "x^3+1"))),
                    std::domain_error);
    CHECK_THROWS_AS(exhaustive_min_lee_weight(span_basis(spec_of(9, "1", "1", "1"))),
                    std::invalid_argument);
}
