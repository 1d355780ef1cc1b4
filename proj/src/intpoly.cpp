#include "pcg/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace pcg {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) {
    if (c == 0) return IntPoly{};
    return IntPoly({c});
}

IntPoly IntPoly::monomial(int k, const mpz_class& c) {
    if (c == 0) return IntPoly{};
    std::vector<mpz_class> v(k + 1, mpz_class(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(int k) const {
    static const mpz_class zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[k];
}

const mpz_class& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), mpz_class(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) out[k] += rhs.coeffs_[k];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const { return *this + (-rhs); }

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> out(coeffs_);
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
    for (size_t a = 0; a < coeffs_.size(); ++a)
        for (size_t b = 0; b < rhs.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * rhs.coeffs_[b];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> out(coeffs_);
    for (auto& c : out) c *= s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < rhs.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> rem(coeffs_);
    std::vector<mpz_class> quot(degree() - rhs.degree() + 1, mpz_class(0));
    for (int k = degree() - rhs.degree(); k >= 0; --k) {
        mpz_class& top = rem[k + rhs.degree()];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), rhs.leading().get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        quot[k] = q;
        for (int j = 0; j <= rhs.degree(); ++j) rem[k + j] -= q * rhs.coeff(j);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return {};
    std::vector<mpz_class> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * mpz_class(static_cast<long>(k));
    return IntPoly(std::move(out));
}

mpz_class IntPoly::evaluate(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class IntPoly::content() const {
    mpz_class g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> out(coeffs_);
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(out));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != 1) out << mag.get_str();
        if (k > 0) {
            if (mag != 1) out << "*";
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
    if (a.degree() < b.degree()) return a;
    IntPoly rem = a;
    const mpz_class& lb = b.leading();
    int steps = a.degree() - b.degree() + 1;
    for (int s = 0; s < steps && !rem.is_zero() && rem.degree() >= b.degree(); ++s) {
        int shift = rem.degree() - b.degree();
        IntPoly t = IntPoly::monomial(shift, rem.leading()) * b;
        rem = rem * lb - t;
    }
    return rem;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly p = a.primitive_part();
    IntPoly q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        IntPoly r = pseudo_remainder(p, q);
        p = q;
        q = r.is_zero() ? IntPoly{} : r.primitive_part();
    }
    return p.primitive_part();
}

bool is_squarefree(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree test on zero polynomial");
    if (p.degree() < 2) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace pcg
