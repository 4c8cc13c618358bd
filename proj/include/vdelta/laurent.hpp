#ifndef VDELTA_LAURENT_HPP
#define VDELTA_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

namespace vdelta {

// Exact integer Laurent polynomial in one variable A. No zero coefficients are stored.
class LaurentPolynomial {
public:
    using exponent_type = int;
    using coefficient_type = std::int64_t;

    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return LaurentPolynomial(); }
    static LaurentPolynomial one() { return monomial(0, 1); }
    // c * A^e
    static LaurentPolynomial monomial(exponent_type e, coefficient_type c);

    bool is_zero() const { return coeffs_.empty(); }
    coefficient_type coefficient(exponent_type e) const;
    const std::map<exponent_type, coefficient_type>& coefficients() const { return coeffs_; }

    // Degree bounds; only meaningful on nonzero polynomials.
    exponent_type max_degree() const;
    exponent_type min_degree() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const;

    LaurentPolynomial pow(unsigned k) const;

    bool operator==(const LaurentPolynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const LaurentPolynomial& other) const { return !(*this == other); }

    // Canonical text form: terms joined with explicit signs, descending exponent,
    // unit coefficients elided, e.g. "-A^10+A^6+A^4", "3*A^2-A^-1", "1", "0".
    std::string to_string() const;

private:
    void set(exponent_type e, coefficient_type c);

    std::map<exponent_type, coefficient_type> coeffs_;
};

} // namespace vdelta

#endif
