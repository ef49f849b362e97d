#include "qcyc/cyclic_code.hpp"

#include <bit>
#include <stdexcept>

namespace qcyc {

namespace {

// Coefficient mask of p reduced mod x^n - 1 (bit i = coefficient of x^i).
std::uint64_t poly_mask_mod_xn1(const BinPoly& p, int n) {
    std::uint64_t m = 0;
    for (int i = 0; i <= (p.is_zero() ? -1 : p.degree()); ++i)
        if (p.coeff(i)) m ^= 1ULL << (i % n);
    return m;
}

RWord rpoly_word(const RPoly& p) {
    return RWord::from_vec(p);
}

RSpan span_of_rword_ideal(RWord g, int n) {
    RSpan span(n, 3 * n);
    RWord row = g;
    for (int i = 0; i < n; ++i) {
        span.insert(row);
        span.insert(row.times_u());
        span.insert(row.times_u2());
        row = row.rotated(n);
    }
    return span;
}

} // namespace

std::string CodeSpec::text() const {
    return "(n=" + std::to_string(n) + ", g1=" + g1.str() + ", a1=" + a1.str() +
           ", g2=" + g2.str() + ")";
}

CodeSpec validate_spec(const CodeSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("invalid spec: length must be positive");
    if (spec.n % 2 == 0) throw std::invalid_argument("invalid spec: even length " + std::to_string(spec.n));
    if (spec.n > kMaxN)
        throw std::invalid_argument("invalid spec: length exceeds supported maximum " + std::to_string(kMaxN));
    const BinPoly modulus = BinPoly::xn_minus_1(spec.n);
    if (spec.g1.is_zero() || spec.a1.is_zero() || spec.g2.is_zero())
        throw std::invalid_argument("invalid spec: zero polynomial in generator triple");
    if (!spec.a1.divides(spec.g1))
        throw std::invalid_argument("invalid spec: a1 does not divide g1");
    if (!spec.g1.divides(modulus))
        throw std::invalid_argument("invalid spec: g1 does not divide x^n-1");
    if (!spec.g2.divides(modulus))
        throw std::invalid_argument("invalid spec: g2 does not divide x^n-1");
    return spec;
}

std::string rpoly_str(const RPoly& p) {
    std::size_t terms = 0;
    for (const RElem& c : p) terms += !c.is_zero();
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = relem_str(p[i]);
        if (i == 0) {
            // parenthesize a multi-term constant only when more terms follow
            out += (terms > 1 && coeff.find('+') != std::string::npos) ? "(" + coeff + ")" : coeff;
            continue;
        }
        std::string power = i == 1 ? "x" : "x^" + std::to_string(i);
        if (coeff == "1") {
            out += power;
        } else if (coeff.find('+') != std::string::npos) {
            out += "(" + coeff + ")*" + power;
        } else {
            out += coeff + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

RPoly generator_poly(const CodeSpec& spec) {
    validate_spec(spec);
    RPoly g(static_cast<std::size_t>(spec.n));
    auto add = [&g, n = spec.n](const BinPoly& p, RElem scale) {
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coeff(i)) {
                auto& c = g[static_cast<std::size_t>(i % n)];
                c = c + scale;
            }
    };
    add(spec.g2, RElem::e1());
    add(spec.g1, RElem::u2());
    add(spec.a1, RElem::w());
    return g;
}

CodeBasis span_basis(const CodeSpec& spec) {
    RPoly g = generator_poly(spec);
    return span_of_rword_ideal(rpoly_word(g), spec.n);
}

int code_size_log2(const CodeSpec& spec) {
    validate_spec(spec);
    return 3 * spec.n - spec.g1.degree() - spec.a1.degree() - spec.g2.degree();
}

bool contains(const CodeBasis& basis, std::span<const RElem> v) {
    if (static_cast<int>(v.size()) != basis.n())
        throw std::invalid_argument("contains: vector length does not match code length");
    return basis.contains(RWord::from_vec(v));
}

DualBasis dual_code(const CodeBasis& basis) {
    std::vector<RWord> masks;
    masks.reserve(3 * basis.rows().size());
    for (const RWord& y : basis.rows()) {
        masks.push_back(RWord{y.a, 0, 0});       // coefficient of 1
        masks.push_back(RWord{0, y.b, y.ac});    // coefficient of u
        masks.push_back(y);                      // coefficient of u^2
    }
    return RSpan::null_space(basis.n(), basis.width(), masks);
}

DualFormulaResult dual_generator_formula(const CodeSpec& spec) {
    validate_spec(spec);
    const int n = spec.n;
    const BinPoly modulus = BinPoly::xn_minus_1(n);
    BinPoly h2 = BinPoly::divrem(modulus, spec.g2).first;
    BinPoly r1 = BinPoly::divrem(modulus, spec.g1).first;
    std::uint64_t hm = poly_mask_mod_xn1(h2.reciprocal(), n);
    std::uint64_t rm = poly_mask_mod_xn1(r1.reciprocal(), n);

    RPoly gen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        F2 h = (hm >> i) & 1, r = (rm >> i) & 1;
        gen[static_cast<std::size_t>(i)] = RElem{h, r, static_cast<F2>(h ^ r)};
    }

    RSpan formula_span = span_of_rword_ideal(rpoly_word(gen), n);
    DualBasis truth = dual_code(span_basis(spec));
    return {gen, formula_span == truth};
}

RwSpan rw_span_from_pair(const BinPoly& g1, const BinPoly& a1, int n) {
    RwWord gw{poly_mask_mod_xn1(g1, n), poly_mask_mod_xn1(a1, n)};
    RwSpan span(n, 2 * n);
    RwWord row = gw;
    for (int i = 0; i < n; ++i) {
        span.insert(row);
        span.insert(row.times_w());
        row = row.rotated(n);
    }
    return span;
}

RwSpan rw_dual(const RwSpan& code) {
    std::vector<RwWord> masks;
    masks.reserve(2 * code.rows().size());
    for (const RwWord& y : code.rows()) {
        masks.push_back(RwWord{y.al, 0}); // coefficient of 1
        masks.push_back(RwWord{y.be, y.al}); // coefficient of w
    }
    return RwSpan::null_space(code.n(), code.width(), masks);
}

BinSpan bin_cyclic_span(const BinPoly& g, int n) {
    BinSpan span(n, n);
    BinWord row{poly_mask_mod_xn1(g, n)};
    for (int i = 0; i < n; ++i) {
        span.insert(row);
        row = row.rotated(n);
    }
    return span;
}

BinSpan bin_dual(const BinSpan& code) {
    return BinSpan::null_space(code.n(), code.width(), code.rows());
}

ContainmentEvidence is_dual_containing(const CodeSpec& spec) {
    validate_spec(spec);
    const int n = spec.n;
    const BinPoly modulus = BinPoly::xn_minus_1(n);

    ContainmentEvidence ev{};
    ev.poly_criterion_binary =
        BinPoly::divrem(modulus, spec.g2 * spec.g2.reciprocal()).second.is_zero();

    BinSpan c2 = bin_cyclic_span(spec.g2, n);
    ev.basis_binary = c2.contains_span(bin_dual(c2));

    RwSpan cw = rw_span_from_pair(spec.g1, spec.a1, n);
    ev.basis_rw = cw.contains_span(rw_dual(cw));

    CodeBasis code = span_basis(spec);
    ev.direct = code.contains_span(dual_code(code));

    if (!ev.agree())
        throw std::logic_error("is_dual_containing: methods disagree on " + spec.text());
    return ev;
}

RwSpan rw_two_generator_span(const BinPoly& f1, const BinPoly& f2, const BinPoly& f3, int n) {
    RwWord gen_a{poly_mask_mod_xn1(f1 * f2, n), 0};
    RwWord gen_b{0, poly_mask_mod_xn1(f1 * f3, n)};
    RwSpan span(n, 2 * n);
    RwWord row_a = gen_a, row_b = gen_b;
    for (int i = 0; i < n; ++i) {
        span.insert(row_a);
        span.insert(row_a.times_w());
        span.insert(row_b);
        row_a = row_a.rotated(n);
        row_b = row_b.rotated(n);
    }
    return span;
}

bool is_self_dual(const BinPoly& f1, const BinPoly& f2, const BinPoly& f3, int n) {
    if (n < 1 || !(f1 * f2 * f3 == BinPoly::xn_minus_1(n)))
        throw std::invalid_argument("is_self_dual: f1*f2*f3 must equal x^n-1");
    return f1 == f3.reciprocal() && f2 == f2.reciprocal();
}

LeeDistance min_lee_distance(const CodeBasis& basis, int budget, int combo_limit) {
    const int m = basis.dim();
    if (m == 0) throw std::domain_error("min_lee_distance: zero code");

    const auto& rows = basis.rows();
    if (m <= budget) {
        // Walk all nonzero codewords in Gray-code order: one XOR per step.
        RWord cur;
        int best = 3 * basis.n() + 1;
        const std::uint64_t total = 1ULL << m;
        for (std::uint64_t k = 1; k < total; ++k) {
            cur ^= rows[static_cast<std::size_t>(std::countr_zero(k))];
            int w = cur.lee_weight();
            if (w < best) best = w;
        }
        return {best, true};
    }

    // Bounded search: combinations of at most combo_limit basis vectors.
    int best = 3 * basis.n() + 1;
    std::vector<int> idx;
    auto search = [&](auto&& self, int start, RWord acc, int depth) -> void {
        if (depth > 0) {
            int w = acc.lee_weight();
            if (w < best) best = w;
        }
        if (depth == combo_limit) return;
        for (int i = start; i < m; ++i)
            self(self, i + 1, acc ^ rows[static_cast<std::size_t>(i)], depth + 1);
    };
    search(search, 0, RWord{}, 0);
    return {best, false};
}

} // namespace qcyc
