#include "lhkit/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lhkit {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(int k, const Rational& a) {
    if (k < 0) throw std::invalid_argument("Polynomial::monomial: negative exponent");
    if (a.is_zero()) return Polynomial();
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c.back() = a;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("Polynomial::leading: zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    Polynomial r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r(Rational(1));
    Polynomial base(*this);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
    Polynomial acc;
    Polynomial lin{b, a};  // a*x + b
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + Polynomial(c_[i]);
    return acc;
}

Polynomial Polynomial::theta(const Rational& c) const {
    if (c_.size() <= 1) return Polynomial();
    // Synthetic division by (x - c): quotient coefficients top down.
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c_[i] + c * carry;
    }
    return Polynomial(std::move(q));
}

Polynomial Polynomial::shift_up(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::shift_up: negative shift");
    if (is_zero() || k == 0) return k == 0 ? *this : Polynomial();
    std::vector<Rational> c(c_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("Polynomial::monic: zero polynomial");
    return leading().inverse() * *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero");
    Polynomial r(*this);
    if (r.degree() < d.degree()) return {Polynomial(), r};
    std::vector<Rational> q(static_cast<size_t>(r.degree() - d.degree()) + 1, Rational(0));
    const Rational inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const Rational f = r.leading() * inv;
        q[k] = f;
        r -= f * d.shift_up(k);
    }
    return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::divexact(const Polynomial& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("Polynomial::divexact: nonzero remainder");
    return q;
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("Polynomial::gcd: both arguments zero");
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const Rational a = c.abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace lhkit
