// Cyclic codes over R of odd length n, built from CRT generator triples
// (g1, a1, g2): the binary component is <g2>, the Rw component is
// <g1 + w a1>, with a1 | g1 | x^n - 1 and g2 | x^n - 1.

#ifndef QCYC_CYCLIC_CODE_HPP
#define QCYC_CYCLIC_CODE_HPP

#include <optional>
#include <string>

#include "qcyc/gf2poly.hpp"
#include "qcyc/ring.hpp"
#include "qcyc/rword.hpp"

namespace qcyc {

struct CodeSpec {
    int n = 0;
    BinPoly g1, a1, g2;

    std::string text() const;
    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

// Checks odd n and the divisibility chain a1 | g1 | x^n-1, g2 | x^n-1.
// Throws std::invalid_argument naming the violated relation.
CodeSpec validate_spec(const CodeSpec& spec);

// A polynomial over R reduced mod x^n - 1: coefficient i belongs to x^i.
using RPoly = std::vector<RElem>;

std::string rpoly_str(const RPoly& p);

// The single generator g(x) with C = <g(x)>: combines the CRT components
// through the idempotents e1 = 1+u^2 (binary side) and u^2 (Rw side):
// g = e1*g2 + u^2*g1 + (u+u^2)*a1.
RPoly generator_poly(const CodeSpec& spec);

using CodeBasis = RSpan;
using DualBasis = RSpan;

// Canonical F2 basis of the code: row reduction of
// { x^i g, x^i u g, x^i u^2 g : 0 <= i < n } over the 3n Gray coordinates.
CodeBasis span_basis(const CodeSpec& spec);

// 3n - deg g1 - deg a1 - deg g2; always equals span_basis(spec).dim().
int code_size_log2(const CodeSpec& spec);

bool contains(const CodeBasis& basis, std::span<const RElem> v);

// The dual under the R-inner product, solved as an F2 linear system: each
// basis vector contributes the three component equations of x.y = 0.
DualBasis dual_code(const CodeBasis& basis);

// The closed-form dual generator h2^(x) + r1^(x) u + (h2^ + r1^)(x) u^2 with
// r1 = (x^n-1)/g1 and h2 = (x^n-1)/g2. The formula does not hold for every
// triple; `matches` reports whether its span equals the linear-algebra dual.
struct DualFormulaResult {
    RPoly generator;
    bool matches;
};
DualFormulaResult dual_generator_formula(const CodeSpec& spec);

// C^perp subseteq C, decided three independent ways which must agree:
//   1. polynomial criterion x^n-1 = 0 mod g2*g2^ for the binary component,
//      plus explicit basis containment for the Rw component;
//   2. componentwise basis containment under CRT (binary and Rw);
//   3. direct containment of every dual basis vector in the code over R.
// Disagreement is an invariant violation and throws std::logic_error.
struct ContainmentEvidence {
    bool poly_criterion_binary;  // g2 g2^ divides x^n - 1
    bool basis_binary;           // C2^perp subseteq C2 by row reduction
    bool basis_rw;               // Cw^perp subseteq Cw by row reduction
    bool direct;                 // C^perp subseteq C over R

    bool method_crt_lemma() const { return poly_criterion_binary && basis_rw; }
    bool method_componentwise() const { return basis_binary && basis_rw; }
    bool method_direct() const { return direct; }
    bool agree() const {
        return method_crt_lemma() == method_componentwise() &&
               method_componentwise() == method_direct();
    }
    bool verdict() const { return direct; }
};
ContainmentEvidence is_dual_containing(const CodeSpec& spec);

// Self-duality of the Rw code (f1 f2, w f1 f3): true iff f1 = f3^ and
// f2 = f2^. Requires f1*f2*f3 = x^n - 1, else std::invalid_argument.
bool is_self_dual(const BinPoly& f1, const BinPoly& f2, const BinPoly& f3, int n);

// The Rw code (f1 f2, w f1 f3) materialized, for cross-checking the predicate.
RwSpan rw_two_generator_span(const BinPoly& f1, const BinPoly& f2, const BinPoly& f3, int n);
RwSpan rw_span_from_pair(const BinPoly& g1, const BinPoly& a1, int n);
RwSpan rw_dual(const RwSpan& code);
BinSpan bin_cyclic_span(const BinPoly& g, int n);
BinSpan bin_dual(const BinSpan& code);

struct LeeDistance {
    int value = 0;
    bool exact = false;
    friend bool operator==(const LeeDistance&, const LeeDistance&) = default;
};

// Minimum nonzero Lee weight. Exact when the code has at most 2^budget
// codewords; otherwise an upper bound from combinations of at most
// combo_limit basis vectors, flagged exact=false.
// Throws std::domain_error for the zero code.
LeeDistance min_lee_distance(const CodeBasis& basis, int budget = 24, int combo_limit = 3);

} // namespace qcyc

#endif
