// Independent brute-force referee: exhaustive duals and distances at tiny n,
// and executable checks of the Gray/shift interplay.
//
// Layout permutation, fixed once and used everywhere: the Gray image in the
// elementwise-triple layout has bit 3i+j where the three-block view has bit
// j*n+i (block j, coordinate i). RWord stores the block view.

#ifndef QCYC_ORACLE_HPP
#define QCYC_ORACLE_HPP

#include "qcyc/cyclic_code.hpp"
#include "qcyc/ring.hpp"
#include "qcyc/rword.hpp"

namespace qcyc {

std::vector<F2> triple_to_block(std::span<const F2> triple_word);
std::vector<F2> block_to_triple(std::span<const F2> block_word);

// Cyclically shift each of the three n-blocks by one.
// Throws std::invalid_argument when the length is not divisible by 3.
std::vector<F2> tau_map(std::span<const F2> block_word);

// Full scan of R^n for vectors orthogonal to every basis vector.
// Throws std::invalid_argument for n > 7.
DualBasis exhaustive_dual(const CodeBasis& basis);

// The identity gray(shift(v)) = tau(gray(v)), checked through the
// documented layout permutation.
bool check_shift_commutation(std::span<const RElem> v);

// Gray image span closed under tau (quasi-cyclicity of index 3).
bool check_quasi_cyclic(const CodeBasis& basis);

bool is_self_orthogonal(const CodeBasis& basis);

// Requires a self-orthogonal code (else std::domain_error); true iff the
// Gray image is self-orthogonal over F2.
bool check_gray_self_orthogonal(const CodeBasis& basis);

// Minimum nonzero Lee weight by scanning all of R^n and testing membership;
// deliberately independent of the span-walk in min_lee_distance.
// Throws std::invalid_argument for n > 7, std::domain_error for the zero code.
int exhaustive_min_lee_weight(const CodeBasis& basis);

} // namespace qcyc

#endif
