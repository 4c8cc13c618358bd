#include "vdelta/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace vdelta {

LaurentPolynomial LaurentPolynomial::monomial(exponent_type e, coefficient_type c) {
    LaurentPolynomial p;
    p.set(e, c);
    return p;
}

LaurentPolynomial::coefficient_type LaurentPolynomial::coefficient(exponent_type e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? 0 : it->second;
}

LaurentPolynomial::exponent_type LaurentPolynomial::max_degree() const {
    if (coeffs_.empty()) throw std::logic_error("max_degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPolynomial::exponent_type LaurentPolynomial::min_degree() const {
    if (coeffs_.empty()) throw std::logic_error("min_degree of zero polynomial");
    return coeffs_.begin()->first;
}

void LaurentPolynomial::set(exponent_type e, coefficient_type c) {
    if (c == 0)
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) + c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.coeffs_) set(e, coefficient(e) - c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : a.coeffs_)
        for (const auto& [e2, c2] : b.coeffs_) r.set(e1 + e2, r.coefficient(e1 + e2) + c1 * c2);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
    *this = *this * other;
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
    LaurentPolynomial r = one();
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

std::string LaurentPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto [e, c] = *it;
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        coefficient_type mag = c < 0 ? -c : c;
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << 'A';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

} // namespace vdelta
