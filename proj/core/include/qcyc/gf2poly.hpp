// Exact polynomial arithmetic over F2 and the divisor lattice of x^n - 1
// for odd n. Coefficients are stored ascending; the representation is kept
// normalized (no stored leading zeros, the zero polynomial stores nothing).

#ifndef QCYC_GF2POLY_HPP
#define QCYC_GF2POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcyc {

class BinPoly {
public:
    // Degree reported for the zero polynomial. Deliberately far away from
    // every natural number so that arithmetic on it blows up visibly.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    BinPoly() = default;

    static BinPoly zero() { return BinPoly{}; }
    static BinPoly one() { return monomial(0); }
    static BinPoly x() { return monomial(1); }
    static BinPoly monomial(int k);
    static BinPoly from_coeffs(std::vector<std::uint8_t> coeffs);
    // x^n + 1, which equals x^n - 1 over F2.
    static BinPoly xn_minus_1(int n);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1; }
    int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }

    friend BinPoly operator+(const BinPoly& p, const BinPoly& q);
    friend BinPoly operator*(const BinPoly& p, const BinPoly& q);
    friend bool operator==(const BinPoly& p, const BinPoly& q) = default;

    // p = q*d + r with deg r < deg d. Throws std::invalid_argument for d = 0.
    static std::pair<BinPoly, BinPoly> divrem(const BinPoly& p, const BinPoly& d);
    static BinPoly gcd(BinPoly p, BinPoly q);

    bool divides(const BinPoly& p) const;

    // x^{deg h} * h(1/x): the coefficient sequence reversed, then normalized.
    // Throws std::invalid_argument for the zero polynomial.
    BinPoly reciprocal() const;

    // Accepts "x^2+x+1" (terms in any order) or an ascending coefficient
    // string such as "111". Throws std::invalid_argument on anything else.
    static BinPoly parse(std::string_view text);
    std::string str() const;

    // Total order: by degree, then by coefficient bits viewed as an integer.
    friend bool operator<(const BinPoly& p, const BinPoly& q);

private:
    void normalize();
    std::vector<std::uint8_t> coeffs_;
};

// 2-cyclotomic cosets mod n; each coset is returned sorted, cosets ordered by
// their smallest member. Used to predict the factor degrees of x^n - 1.
std::vector<std::vector<int>> cyclotomic_cosets_mod2(int n);

// The pairwise-distinct irreducible factors of x^n - 1 over F2, odd n only
// (the factorization is square-free exactly then). Sorted ascending.
// Throws std::invalid_argument for even or non-positive n.
std::vector<BinPoly> factor_xn_minus_1(int n);

// All 2^t monic divisors of x^n - 1 (t irreducible factors), sorted ascending.
std::vector<BinPoly> divisors_xn1(int n);

} // namespace qcyc

#endif
