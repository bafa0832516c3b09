#ifndef LHKIT_POLYNOMIAL_HPP
#define LHKIT_POLYNOMIAL_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "lhkit/rational.hpp"

namespace lhkit {

/// Dense univariate polynomial over Rational in the variable x.
/// coeff(i) is the coefficient of x^i. Invariant: the highest stored
/// coefficient is nonzero; the zero polynomial stores nothing and has
/// degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
    Polynomial(long c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs)
        : c_(coeffs) { trim(); }

    /// a * x^k
    static Polynomial monomial(int k, const Rational& a = Rational(1));
    static Polynomial x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }
    friend Polynomial operator*(long s, const Polynomial& p) { return Rational(s) * p; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& s) { return *this = s * *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const;

    /// Formal derivative.
    Polynomial derivative() const;

    /// Horner evaluation.
    Rational operator()(const Rational& at) const;

    /// p(a*x + b)
    Polynomial compose_affine(const Rational& a, const Rational& b) const;

    /// theta_c: (p(x) - p(c)) / (x - c), by synthetic division. Degree drops
    /// by one; theta of a constant is zero.
    Polynomial theta(const Rational& c) const;

    /// Multiplies by x^k.
    Polynomial shift_up(int k) const;

    Polynomial monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    /// Exact division; throws std::domain_error when the remainder is nonzero.
    Polynomial divexact(const Polynomial& d) const;

    /// Monic gcd over the rationals. gcd(p, 0) = monic(p); both arguments zero
    /// is invalid.
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string str(const std::string& var = "x") const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace lhkit

#endif
