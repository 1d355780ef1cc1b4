#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pcg {

// Dense polynomial with arbitrary-precision integer coefficients,
// degree-indexed (coeff[k] multiplies x^k). Leading coefficient is kept
// nonzero; the zero polynomial has an empty coefficient list.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly constant(const mpz_class& c);
    // x^k with unit coefficient
    static IntPoly monomial(int k, const mpz_class& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(int k) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const mpz_class& s) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& rhs) const = default;

    // Quotient of an exact division; throws if rhs does not divide this
    // exactly over the integers.
    IntPoly divide_exact(const IntPoly& rhs) const;

    IntPoly derivative() const;
    mpz_class evaluate(const mpz_class& x) const;

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    mpz_class content() const;
    // this / content, sign-normalized so the leading coefficient is positive
    IntPoly primitive_part() const;

    // Human-readable form, e.g. "x^3 - 4*x^2 + 3*x".
    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b,
// computed without fractions. b must be nonzero.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Polynomial gcd over the integers via the primitive-part Euclidean
// algorithm; result is primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// True iff gcd(p, p') is constant. Rejects the zero polynomial.
bool is_squarefree(const IntPoly& p);

}  // namespace pcg
