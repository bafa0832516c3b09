#include "lhkit/rational.hpp"

#include <ostream>

namespace lhkit {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    if (sgn(v.get_den()) == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace lhkit
