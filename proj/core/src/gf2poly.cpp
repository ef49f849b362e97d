#include "qcyc/gf2poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace qcyc {

void BinPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BinPoly BinPoly::monomial(int k) {
    if (k < 0) throw std::invalid_argument("BinPoly::monomial: negative exponent");
    BinPoly p;
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, 0);
    p.coeffs_.back() = 1;
    return p;
}

BinPoly BinPoly::from_coeffs(std::vector<std::uint8_t> coeffs) {
    BinPoly p;
    p.coeffs_ = std::move(coeffs);
    for (auto& c : p.coeffs_) c &= 1;
    p.normalize();
    return p;
}

BinPoly BinPoly::xn_minus_1(int n) {
    if (n < 1) throw std::invalid_argument("xn_minus_1: n must be positive");
    BinPoly p = monomial(n);
    p.coeffs_[0] = 1;
    return p;
}

BinPoly operator+(const BinPoly& p, const BinPoly& q) {
    BinPoly r;
    r.coeffs_.resize(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        std::uint8_t a = i < p.coeffs_.size() ? p.coeffs_[i] : 0;
        std::uint8_t b = i < q.coeffs_.size() ? q.coeffs_[i] : 0;
        r.coeffs_[i] = a ^ b;
    }
    r.normalize();
    return r;
}

BinPoly operator*(const BinPoly& p, const BinPoly& q) {
    if (p.is_zero() || q.is_zero()) return BinPoly{};
    BinPoly r;
    r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (!p.coeffs_[i]) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            r.coeffs_[i + j] ^= q.coeffs_[j];
    }
    r.normalize();
    return r;
}

std::pair<BinPoly, BinPoly> BinPoly::divrem(const BinPoly& p, const BinPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("BinPoly::divrem: division by zero polynomial");
    BinPoly q, r = p;
    if (p.is_zero() || p.degree() < d.degree()) return {q, r};
    q.coeffs_.assign(static_cast<std::size_t>(p.degree() - d.degree()) + 1, 0);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int s = r.degree() - d.degree();
        q.coeffs_[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
            r.coeffs_[i + static_cast<std::size_t>(s)] ^= d.coeffs_[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

BinPoly BinPoly::gcd(BinPoly p, BinPoly q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("BinPoly::gcd: both inputs zero");
    while (!q.is_zero()) {
        BinPoly r = divrem(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

bool BinPoly::divides(const BinPoly& p) const {
    if (is_zero()) return p.is_zero();
    return divrem(p, *this).second.is_zero();
}

BinPoly BinPoly::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("BinPoly::reciprocal: zero polynomial");
    std::vector<std::uint8_t> rev(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(std::move(rev));
}

bool operator<(const BinPoly& p, const BinPoly& q) {
    if (p.coeffs_.size() != q.coeffs_.size()) return p.coeffs_.size() < q.coeffs_.size();
    // Same degree: compare coefficient bits as an integer, high bits first.
    for (std::size_t i = p.coeffs_.size(); i-- > 0;)
        if (p.coeffs_[i] != q.coeffs_[i]) return p.coeffs_[i] < q.coeffs_[i];
    return false;
}

BinPoly BinPoly::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("BinPoly::parse: empty input");

    bool binary_string = s.find_first_not_of("01") == std::string::npos;
    if (binary_string && s.size() > 1) {
        std::vector<std::uint8_t> coeffs;
        coeffs.reserve(s.size());
        for (char c : s) coeffs.push_back(static_cast<std::uint8_t>(c - '0'));
        return from_coeffs(std::move(coeffs));
    }
    if (s == "0") return zero();

    BinPoly p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        int exponent;
        if (term == "1") {
            exponent = 0;
        } else if (term == "x") {
            exponent = 1;
        } else if (term.size() > 2 && term[0] == 'x' && term[1] == '^') {
            std::size_t used = 0;
            try {
                exponent = std::stoi(term.substr(2), &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("BinPoly::parse: bad term '" + term + "'");
            }
            if (used != term.size() - 2 || exponent < 0)
                throw std::invalid_argument("BinPoly::parse: bad exponent in '" + term + "'");
        } else {
            throw std::invalid_argument("BinPoly::parse: bad term '" + term + "'");
        }
        p = p + monomial(exponent);
    }
    return p;
}

std::string BinPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += "1";
        else if (i == 1) out += "x";
        else out += "x^" + std::to_string(i);
    }
    return out;
}

std::vector<std::vector<int>> cyclotomic_cosets_mod2(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_cosets_mod2: n must be positive");
    std::vector<std::vector<int>> cosets;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> coset;
        int v = s;
        do {
            seen[static_cast<std::size_t>(v)] = true;
            coset.push_back(v);
            v = (2 * v) % n;
        } while (v != s);
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

namespace {

BinPoly mulmod(const BinPoly& p, const BinPoly& q, const BinPoly& mod) {
    return BinPoly::divrem(p * q, mod).second;
}

// r + r^2 + r^4 + ... + r^(2^(d-1)) mod g: the F2 trace map on the degree-d
// components of g, used to split equal-degree products.
BinPoly trace_poly(const BinPoly& r, int d, const BinPoly& g) {
    BinPoly acc = BinPoly::divrem(r, g).second;
    BinPoly pow = acc;
    for (int i = 1; i < d; ++i) {
        pow = mulmod(pow, pow, g);
        acc = acc + pow;
    }
    return acc;
}

// Enumerate nonzero polynomials in a fixed order: 1, x, x+1, x^2, ...
BinPoly nth_poly(unsigned long long code) {
    std::vector<std::uint8_t> coeffs;
    for (unsigned long long v = code; v; v >>= 1) coeffs.push_back(v & 1);
    return BinPoly::from_coeffs(std::move(coeffs));
}

// Split a square-free product of irreducibles, all of degree d.
void equal_degree_split(const BinPoly& g, int d, std::vector<BinPoly>& out) {
    if (g.is_one()) return;
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    for (unsigned long long code = 2;; ++code) {
        BinPoly t = trace_poly(nth_poly(code), d, g);
        if (t.is_zero()) continue;
        BinPoly s = BinPoly::gcd(g, t);
        if (s.is_one() || s.degree() == g.degree()) continue;
        equal_degree_split(s, d, out);
        equal_degree_split(BinPoly::divrem(g, s).first, d, out);
        return;
    }
}

} // namespace

std::vector<BinPoly> factor_xn_minus_1(int n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("factor_xn_minus_1: n must be odd and positive");

    const BinPoly target = BinPoly::xn_minus_1(n);
    std::vector<BinPoly> factors;

    // Distinct-degree stage: peel off the product of all irreducible factors
    // of degree exactly d, for d = 1, 2, ...
    BinPoly rem = target;
    BinPoly h = BinPoly::x(); // x^(2^d) mod rem, maintained incrementally
    for (int d = 1; !rem.is_one(); ++d) {
        if (2 * d > rem.degree()) {
            factors.push_back(rem); // what is left is irreducible
            break;
        }
        h = mulmod(h, h, rem);
        BinPoly g = BinPoly::gcd(h + BinPoly::x(), rem);
        if (!g.is_one()) {
            equal_degree_split(g, d, factors);
            rem = BinPoly::divrem(rem, g).first;
            h = BinPoly::divrem(h, rem).second;
        }
    }

    std::sort(factors.begin(), factors.end());

    // Cross-check against the cyclotomic-coset prediction of factor degrees.
    std::multiset<int> got, want;
    BinPoly product = BinPoly::one();
    for (const auto& f : factors) {
        got.insert(f.degree());
        product = product * f;
    }
    for (const auto& coset : cyclotomic_cosets_mod2(n))
        want.insert(static_cast<int>(coset.size()));
    if (got != want || !(product == target))
        throw std::logic_error("factor_xn_minus_1: factorization failed self-check");

    return factors;
}

std::vector<BinPoly> divisors_xn1(int n) {
    auto factors = factor_xn_minus_1(n);
    std::vector<BinPoly> divisors{BinPoly::one()};
    for (const auto& f : factors) {
        std::size_t count = divisors.size();
        for (std::size_t i = 0; i < count; ++i)
            divisors.push_back(divisors[i] * f);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

} // namespace qcyc
