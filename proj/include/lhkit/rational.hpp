#ifndef LHKIT_RATIONAL_HPP
#define LHKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace lhkit {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Zero is stored as 0/1. This is the scalar field for
/// every coefficient in the library; no floating point appears anywhere on a
/// verification path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}

    /// n/d, canonicalized. Throws std::invalid_argument when d == 0.
    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Wire format: "p/q" with the "/q" omitted when q == 1.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline Rational operator+(long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

}  // namespace lhkit

#endif
