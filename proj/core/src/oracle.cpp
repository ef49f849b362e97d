#include "qcyc/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace qcyc {

std::vector<F2> triple_to_block(std::span<const F2> triple_word) {
    if (triple_word.size() % 3 != 0)
        throw std::invalid_argument("triple_to_block: length not divisible by 3");
    std::size_t n = triple_word.size() / 3;
    std::vector<F2> out(triple_word.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[j * n + i] = triple_word[3 * i + j];
    return out;
}

std::vector<F2> block_to_triple(std::span<const F2> block_word) {
    if (block_word.size() % 3 != 0)
        throw std::invalid_argument("block_to_triple: length not divisible by 3");
    std::size_t n = block_word.size() / 3;
    std::vector<F2> out(block_word.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[3 * i + j] = block_word[j * n + i];
    return out;
}

std::vector<F2> tau_map(std::span<const F2> block_word) {
    if (block_word.size() % 3 != 0)
        throw std::invalid_argument("tau_map: length not divisible by 3");
    std::size_t n = block_word.size() / 3;
    std::vector<F2> out(block_word.size());
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < n; ++i)
            out[j * n + (i + 1) % n] = block_word[j * n + i];
    return out;
}

DualBasis exhaustive_dual(const CodeBasis& basis) {
    const int n = basis.n();
    if (n > 7) throw std::invalid_argument("exhaustive_dual: n > 7 not supported");
    const auto& rows = basis.rows();

    DualBasis dual(n, 3 * n);
    // The orthogonality conditions are F2-linear in the candidate, so the
    // syndrome (three inner-product components per basis row, at most 63
    // bits) can be maintained incrementally: flipping one Gray coordinate
    // toggles a precomputed delta.
    std::vector<std::uint64_t> delta(static_cast<std::size_t>(3 * n), 0);
    for (int p = 0; p < 3 * n; ++p) {
        RWord unit;
        unit.set(p, n, true);
        std::uint64_t d = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            d |= static_cast<std::uint64_t>(r_dot_comp1(unit, rows[i])) << (3 * i);
            d |= static_cast<std::uint64_t>(r_dot_comp_u(unit, rows[i])) << (3 * i + 1);
            d |= static_cast<std::uint64_t>(r_dot_comp_u2(unit, rows[i])) << (3 * i + 2);
        }
        delta[static_cast<std::size_t>(p)] = d;
    }

    RWord cur; // walks all of R^n in Gray-code order over the 3n bits
    std::uint64_t syndrome = 0;
    dual.insert(RWord{}); // no-op, keeps the zero vector case explicit
    const std::uint64_t total = 1ULL << (3 * n);
    for (std::uint64_t k = 1; k < total; ++k) {
        int bitpos = std::countr_zero(k);
        cur.set(bitpos, n, !cur.bit(bitpos, n));
        syndrome ^= delta[static_cast<std::size_t>(bitpos)];
        if (syndrome == 0) dual.insert(cur);
    }
    return dual;
}

bool check_shift_commutation(std::span<const RElem> v) {
    RVec shifted = shift(v);
    std::vector<F2> lhs = gray_map(shifted);
    std::vector<F2> rhs = block_to_triple(tau_map(triple_to_block(gray_map(v))));
    return lhs == rhs;
}

bool check_quasi_cyclic(const CodeBasis& basis) {
    for (const RWord& row : basis.rows())
        if (!basis.contains(row.rotated(basis.n()))) return false;
    return true;
}

bool is_self_orthogonal(const CodeBasis& basis) {
    const auto& rows = basis.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (!r_orthogonal(rows[i], rows[j])) return false;
    return true;
}

bool check_gray_self_orthogonal(const CodeBasis& basis) {
    if (!is_self_orthogonal(basis))
        throw std::domain_error("check_gray_self_orthogonal: code is not self-orthogonal over R");
    const auto& rows = basis.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (RWord::parity_and(rows[i], rows[j])) return false;
    return true;
}

int exhaustive_min_lee_weight(const CodeBasis& basis) {
    const int n = basis.n();
    if (n > 7) throw std::invalid_argument("exhaustive_min_lee_weight: n > 7 not supported");
    if (basis.dim() == 0) throw std::domain_error("exhaustive_min_lee_weight: zero code");

    int best = 3 * n + 1;
    RWord cur;
    const std::uint64_t total = 1ULL << (3 * n);
    for (std::uint64_t k = 1; k < total; ++k) {
        int bitpos = std::countr_zero(k);
        cur.set(bitpos, n, !cur.bit(bitpos, n));
        if (basis.contains(cur)) {
            // Lee weight equals Hamming weight of the Gray image, counted here
            // from the element table rather than from popcounts.
            int w = lee_weight(std::span<const RElem>(cur.to_vec(n)));
            if (w < best) best = w;
        }
    }
    return best;
}

} // namespace qcyc
