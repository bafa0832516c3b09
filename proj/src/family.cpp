#include "lhkit/family.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lhkit {

namespace {

const Rational kOne(1);
const Rational kTwo(2);

Rational frac(const Rational& num, const Rational& den, const std::string& what, int n) {
    if (den.is_zero()) throw RegularityError(what + " denominator vanishes", n);
    return num / den;
}

std::string family_caption(FamilyId id) {
    switch (id) {
        case FamilyId::hermite1: return "Case 1 analogous to Hermite";
        case FamilyId::hermite2: return "Case 2 analogous to Hermite";
        case FamilyId::laguerre1: return "Case 1 analogous to Laguerre";
        case FamilyId::laguerre2: return "Case 2 analogous to Laguerre";
        case FamilyId::bessel1: return "Case 1 analogous to Bessel";
        case FamilyId::bessel2: return "Case 2 analogous to Bessel (new case)";
        case FamilyId::bessel3: return "Case 3 analogous to Bessel (new case)";
        case FamilyId::bessel4: return "Case 4 analogous to Bessel";
        case FamilyId::jacobi1: return "Case 1 analogous to Jacobi";
        case FamilyId::jacobi2: return "Case 2 analogous to Jacobi";
    }
    return "?";
}

}  // namespace

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> ids = {
        FamilyId::hermite1, FamilyId::hermite2, FamilyId::laguerre1, FamilyId::laguerre2,
        FamilyId::bessel1,  FamilyId::bessel2,  FamilyId::bessel3,   FamilyId::bessel4,
        FamilyId::jacobi1,  FamilyId::jacobi2,
    };
    return ids;
}

std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::hermite1: return "hermite1";
        case FamilyId::hermite2: return "hermite2";
        case FamilyId::laguerre1: return "laguerre1";
        case FamilyId::laguerre2: return "laguerre2";
        case FamilyId::bessel1: return "bessel1";
        case FamilyId::bessel2: return "bessel2";
        case FamilyId::bessel3: return "bessel3";
        case FamilyId::bessel4: return "bessel4";
        case FamilyId::jacobi1: return "jacobi1";
        case FamilyId::jacobi2: return "jacobi2";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name) {
    for (FamilyId id : all_families())
        if (family_name(id) == name) return id;
    return std::nullopt;
}

const std::vector<std::string>& family_params(FamilyId id) {
    static const std::vector<std::string> lr = {"lambda", "rho"};
    static const std::vector<std::string> lrt = {"lambda", "rho", "tau"};
    static const std::vector<std::string> lra = {"lambda", "rho", "alpha"};
    static const std::vector<std::string> lrta = {"lambda", "rho", "tau", "alpha"};
    static const std::vector<std::string> lrab = {"lambda", "rho", "alpha", "beta"};
    static const std::vector<std::string> lrtab = {"lambda", "rho", "tau", "alpha", "beta"};
    switch (id) {
        case FamilyId::hermite1: return lrt;
        case FamilyId::hermite2: return lr;
        case FamilyId::laguerre1: return lrta;
        case FamilyId::laguerre2: return lra;
        case FamilyId::bessel1: return lrta;
        case FamilyId::bessel2:
        case FamilyId::bessel3:
        case FamilyId::bessel4: return lra;
        case FamilyId::jacobi1: return lrtab;
        case FamilyId::jacobi2: return lrab;
    }
    return lr;
}

std::string Family::caption() const { return family_caption(id_); }

Rational Family::param(const std::string& key) const {
    auto it = params_.find(key);
    if (it == params_.end())
        throw std::invalid_argument("family " + name() + " has no parameter '" + key + "'");
    return it->second;
}

Family Family::make(FamilyId id, const ParamMap& params) {
    const auto& names = family_params(id);
    for (const auto& n : names)
        if (!params.count(n))
            throw std::invalid_argument("family " + family_name(id) + ": missing parameter '" + n +
                                        "'");
    for (const auto& [k, v] : params) {
        (void)v;
        if (std::find(names.begin(), names.end(), k) == names.end())
            throw std::invalid_argument("family " + family_name(id) + ": unknown parameter '" + k +
                                        "'");
    }

    Family f;
    f.id_ = id;
    f.params_ = params;

    const Rational rho = f.param("rho");
    if (rho.is_zero()) throw RegularityError("rho != 0", -1);
    const Rational l = f.param("lambda");

    const Polynomial X = Polynomial::x();
    switch (id) {
        case FamilyId::hermite1: {
            const Rational t = f.param("tau");
            f.phi_ = Polynomial(1);
            f.psi_ = Polynomial{-4 * l / rho, 2 * (2 - rho) / rho};
            f.B_ = Polynomial{1 - rho * (t + 1) - 2 * l * l / rho, 2 * l * (2 - rho) / rho,
                              2 * (rho - 1) / rho};
            break;
        }
        case FamilyId::hermite2: {
            f.phi_ = Polynomial(1);
            f.psi_ = Polynomial{Rational(0), Rational(-2)};
            f.B_ = Polynomial{1 - rho, -2 * l, Rational(2)};
            break;
        }
        case FamilyId::laguerre1: {
            const Rational t = f.param("tau");
            const Rational a = f.param("alpha");
            const Rational s = 2 * t + a + 1;
            f.phi_ = X;
            f.psi_ = Polynomial{(rho - 2) / rho * s - 2 * l / rho, (2 - rho) / rho};
            f.B_ = Polynomial{(s + l) * ((rho - 1) / rho * s + 1 - l / rho) -
                                  rho * (t + 1) * (t + a + 1),
                              2 * (1 - rho) / rho * s + l * (2 - rho) / rho, (rho - 1) / rho};
            break;
        }
        case FamilyId::laguerre2: {
            const Rational a = f.param("alpha");
            f.phi_ = X;
            f.psi_ = Polynomial{a - 1, Rational(-1)};
            f.B_ = Polynomial{a * (a - 1 + l) - rho, 2 * (1 - a) - l, Rational(1)};
            break;
        }
        case FamilyId::bessel1: {
            const Rational t = f.param("tau");
            const Rational a = f.param("alpha");
            const Rational ta = t + a;
            const Rational beta0 = f.beta_raw(0);
            if (ta.is_zero()) throw RegularityError("psi denominator tau + alpha vanishes", -1);
            const Rational w = 2 * ta - 1;  // 2(tau+alpha)-1
            if (w.is_zero()) throw RegularityError("tau + alpha != -n/2", 1);
            f.phi_ = X * X;
            f.psi_ = Polynomial{2 / rho * w * beta0 - 2 * (1 - a) / ta,
                                2 * ((1 - rho) / rho + (rho - 2) / rho * ta)};
            f.B_ = Polynomial{w / rho * beta0 * beta0 + 2 * (a - 1) / ta * beta0 -
                                  rho * (t + 1) * (t + 2 * a - 1) / (w * ta * ta),
                              2 * ((1 - a) / ta + beta0 * (ta * (rho - 2) / rho + 1 / rho)),
                              (1 - rho) / rho * w};
            break;
        }
        case FamilyId::bessel2: {
            const Rational a = f.param("alpha");
            f.phi_ = X * X;
            f.psi_ = Polynomial{Rational(-2), -2 * a};
            f.B_ = Polynomial{-2 * l - rho * (2 * a - 3), 2 * (1 - a) * l + 2, 2 * a - 1};
            break;
        }
        case FamilyId::bessel3: {
            const Rational a = f.param("alpha");
            f.phi_ = X * X;
            f.psi_ = Polynomial{Rational(2), 2 * (a - 2)};
            f.B_ = Polynomial{2 * l + rho * (2 * a - 1), 2 * ((a - 1) * l - 1), -(2 * a - 3)};
            break;
        }
        case FamilyId::bessel4: {
            const Rational a = f.param("alpha");
            if (a.is_zero() || (a - 1).is_zero() || (2 * a - 1).is_zero())
                throw RegularityError("alpha != (1-n)/2, n >= -1", -1);
            const Rational beta0 = 1 / ((a - 1) * a) + l;
            f.phi_ = X * X;
            f.psi_ = Polynomial{2 / rho * (2 * a - 1) * beta0 - 2 / a,
                                2 * ((1 - rho) / rho + a * (rho - 2) / rho)};
            f.B_ = Polynomial{(2 * a - 1) / rho * beta0 * beta0 - 2 * beta0 / a +
                                  rho / ((2 * a - 1) * a * a),
                              2 * ((a + (1 - 2 * a) / rho) * beta0 + 1 / a),
                              (rho - 1) / rho * (1 - 2 * a)};
            break;
        }
        case FamilyId::jacobi1: {
            const Rational t = f.param("tau");
            const Rational a = f.param("alpha");
            const Rational bb = f.param("beta");
            const Rational s = 2 * t + a + bb;  // 2 tau + alpha + beta
            const Rational d = a * a - bb * bb;
            if (s.is_zero() || (s + 2).is_zero())
                throw RegularityError("2 tau + alpha + beta != -n", -1);
            const Rational beta0 = d / ((s + 2) * s) + l;
            const Rational g1num = 4 * rho * (t + 1) * (t + a + bb + 1) * (t + a + 1) * (t + bb + 1);
            const Rational g1den = (s + 1) * (s + 2) * (s + 2) * (s + 3);
            if (g1den.is_zero()) throw RegularityError("2 tau + alpha + beta != -n", -1);
            const Rational gamma1 = g1num / g1den;
            f.phi_ = X * X - Polynomial(1);
            f.psi_ = Polynomial{2 / rho * (s + 1) * beta0 - d / (s + 2),
                                (rho - 2) / rho * (s + 1) - 1};
            f.B_ = Polynomial{(s + 3) * gamma1 - 1 + (s + 1) / rho * beta0 * beta0 -
                                  d / (s + 2) * beta0,
                              ((rho - 2) / rho * s + 2 * (rho - 1) / rho) * beta0 + d / (s + 2),
                              (1 - rho) / rho * (s + 1)};
            break;
        }
        case FamilyId::jacobi2: {
            const Rational a = f.param("alpha");
            const Rational bb = f.param("beta");
            f.phi_ = X * X - Polynomial(1);
            f.psi_ = Polynomial{a - bb, a + bb - 2};
            f.B_ = Polynomial{(a - bb) * l - 1 + rho * (1 + a + bb), (a + bb) * l + bb - a,
                              1 - a - bb};
            break;
        }
    }
    return f;
}

Rational Family::beta_raw(int n) const {
    if (n < 0) throw std::invalid_argument("beta: n must be >= 0");
    const Rational l = param("lambda");
    switch (id_) {
        case FamilyId::hermite1:
        case FamilyId::hermite2:
            return n == 0 ? l : Rational(0);
        case FamilyId::laguerre1: {
            const Rational t = param("tau"), a = param("alpha");
            if (n == 0) return 2 * t + a + 1 + l;
            return 2 * (n + t) + a + 1;
        }
        case FamilyId::laguerre2: {
            const Rational a = param("alpha");
            if (n == 0) return a - 1 + l;
            return 2 * n + a - 1;
        }
        case FamilyId::bessel1: {
            const Rational t = param("tau"), a = param("alpha");
            if (n == 0) return frac(1 - a, (t + a) * (t + a - 1), "beta(0)", 0) + l;
            return frac(1 - a, (n - 1 + t + a) * (n + t + a), "beta", n);
        }
        case FamilyId::bessel2: {
            const Rational a = param("alpha");
            if (n == 0) return l;
            return frac(1 - a, (n - a) * (n + 1 - a), "beta", n);
        }
        case FamilyId::bessel3: {
            const Rational a = param("alpha");
            if (n == 0) return l;
            return frac(1 - a, (n + a - 2) * (n + a - 1), "beta", n);
        }
        case FamilyId::bessel4: {
            const Rational a = param("alpha");
            if (n == 0) return frac(kOne, (a - 1) * a, "beta(0)", 0) + l;
            return frac(kOne, (n - 1 + a) * (n + a), "beta", n);
        }
        case FamilyId::jacobi1: {
            const Rational t = param("tau"), a = param("alpha"), bb = param("beta");
            const Rational s = 2 * t + a + bb, d = a * a - bb * bb;
            if (n == 0) return frac(d, (s + 2) * s, "beta(0)", 0) + l;
            return frac(d, (2 * n + s) * (2 * n + s + 2), "beta", n);
        }
        case FamilyId::jacobi2: {
            const Rational a = param("alpha"), bb = param("beta");
            const Rational s = a + bb, d = a * a - bb * bb;
            if (n == 0) return l;
            return frac(-d, (2 * n + s - 2) * (2 * n + s), "beta", n);
        }
    }
    throw std::logic_error("unreachable");
}

Rational Family::gamma_raw(int n) const {
    if (n < 1) throw std::invalid_argument("gamma: n must be >= 1");
    const Rational rho = param("rho");
    switch (id_) {
        case FamilyId::hermite1: {
            const Rational t = param("tau");
            if (n == 1) return rho * (t + 1) / kTwo;
            return (n + t) / kTwo;
        }
        case FamilyId::hermite2:
            return n == 1 ? rho / kTwo : Rational(n - 1) / kTwo;
        case FamilyId::laguerre1: {
            const Rational t = param("tau"), a = param("alpha");
            if (n == 1) return rho * (1 + t) * (t + a + 1);
            return (n + t) * (n + t + a);
        }
        case FamilyId::laguerre2: {
            const Rational a = param("alpha");
            if (n == 1) return rho;
            return Rational(n - 1) * (n - 1 + a);
        }
        case FamilyId::bessel1: {
            const Rational t = param("tau"), a = param("alpha");
            if (n == 1)
                return frac(-rho * (t + 1) * (t + 2 * a - 1),
                            (2 * t + 2 * a - 1) * (t + a) * (t + a) * (2 * t + 2 * a + 1),
                            "gamma(1)", 1);
            return frac(-Rational(n + t) * (n + t + 2 * a - 2),
                        (2 * n + 2 * t + 2 * a - 3) * (n - 1 + t + a) * (n - 1 + t + a) *
                            (2 * n + 2 * t + 2 * a - 1),
                        "gamma", n);
        }
        case FamilyId::bessel2: {
            const Rational a = param("alpha");
            if (n == 1) return rho;
            return frac(-Rational(n - 1) * (n + 1 - 2 * a),
                        (2 * n - 1 - 2 * a) * (n - a) * (n - a) * (2 * n + 1 - 2 * a), "gamma", n);
        }
        case FamilyId::bessel3: {
            const Rational a = param("alpha");
            if (n == 1) return rho;
            return frac(-Rational(n - 1) * (n + 2 * a - 3),
                        (2 * n + 2 * a - 5) * (n + a - 2) * (n + a - 2) * (2 * n + 2 * a - 3),
                        "gamma", n);
        }
        case FamilyId::bessel4: {
            const Rational a = param("alpha");
            if (n == 1)
                return frac(rho, (2 * a - 1) * a * a * (2 * a + 1), "gamma(1)", 1);
            return frac(kOne,
                        (2 * n + 2 * a - 3) * (n - 1 + a) * (n - 1 + a) * (2 * n + 2 * a - 1),
                        "gamma", n);
        }
        case FamilyId::jacobi1: {
            const Rational t = param("tau"), a = param("alpha"), bb = param("beta");
            const Rational s = 2 * t + a + bb;
            if (n == 1)
                return frac(4 * rho * (t + 1) * (t + a + bb + 1) * (t + a + 1) * (t + bb + 1),
                            (s + 1) * (s + 2) * (s + 2) * (s + 3), "gamma(1)", 1);
            return frac(4 * Rational(n + t) * (n + t + a + bb) * (n + t + a) * (n + t + bb),
                        (2 * n + s - 1) * (2 * n + s) * (2 * n + s) * (2 * n + s + 1), "gamma", n);
        }
        case FamilyId::jacobi2: {
            const Rational a = param("alpha"), bb = param("beta");
            const Rational s = a + bb;
            if (n == 1) return rho;
            return frac(4 * Rational(n - 1) * (n - 1 + s) * (n - 1 + a) * (n - 1 + bb),
                        (2 * n + s - 3) * (2 * n + s - 2) * (2 * n + s - 2) * (2 * n + s - 1),
                        "gamma", n);
        }
    }
    throw std::logic_error("unreachable");
}

Polynomial Family::C_raw(int n) const {
    if (n < 0) throw std::invalid_argument("C: n must be >= 0");
    const Rational rho = param("rho");
    if (n == 0) {
        switch (id_) {
            case FamilyId::hermite1: {
                const Rational l = param("lambda");
                return Polynomial{4 * l / rho, 2 * (rho - 2) / rho};
            }
            case FamilyId::hermite2:
                return Polynomial{Rational(0), Rational(2)};
            case FamilyId::laguerre1: {
                const Rational t = param("tau"), a = param("alpha"), l = param("lambda");
                const Rational s = 2 * t + a + 1;
                return Polynomial{-(rho - 2) / rho * s + 2 * l / rho - 1, (rho - 2) / rho};
            }
            case FamilyId::laguerre2: {
                const Rational a = param("alpha");
                return Polynomial{-a, Rational(1)};
            }
            case FamilyId::bessel1: {
                const Rational t = param("tau"), a = param("alpha");
                const Rational ta = t + a;
                return Polynomial{-2 / rho * (2 * ta - 1) * beta(0) - 2 * (a - 1) / ta,
                                  2 * (ta * (2 / rho - 1) - 1 / rho)};
            }
            case FamilyId::bessel2: {
                const Rational a = param("alpha");
                return Polynomial{Rational(2), 2 * (a - 1)};
            }
            case FamilyId::bessel3: {
                const Rational a = param("alpha");
                return Polynomial{Rational(-2), 2 * (1 - a)};
            }
            case FamilyId::bessel4: {
                const Rational a = param("alpha");
                return Polynomial{-2 / rho * (2 * a - 1) * beta(0) + 2 / a,
                                  2 * ((2 - rho) / rho * a - 1 / rho)};
            }
            case FamilyId::jacobi1: {
                const Rational t = param("tau"), a = param("alpha"), bb = param("beta");
                const Rational s = 2 * t + a + bb, d = a * a - bb * bb;
                return Polynomial{-2 / rho * (s + 1) * beta(0) + d / (s + 2),
                                  (2 - rho) / rho * (s + 1) - 1};
            }
            case FamilyId::jacobi2: {
                const Rational a = param("alpha"), bb = param("beta");
                return Polynomial{bb - a, -(a + bb)};
            }
        }
    }
    switch (id_) {
        case FamilyId::hermite1:
        case FamilyId::hermite2:
            return Polynomial{Rational(0), Rational(-2)};
        case FamilyId::laguerre1: {
            const Rational t = param("tau"), a = param("alpha");
            return Polynomial{a + 2 * (n + t), Rational(-1)};
        }
        case FamilyId::laguerre2: {
            const Rational a = param("alpha");
            return Polynomial{a + 2 * (n - 1), Rational(-1)};
        }
        case FamilyId::bessel1: {
            const Rational t = param("tau"), a = param("alpha");
            const Rational m = n - 1 + t + a;
            return Polynomial{frac(-2 * (1 - a), m, "C", n), 2 * m};
        }
        case FamilyId::bessel2: {
            const Rational a = param("alpha");
            const Rational m = Rational(n) - a;
            return Polynomial{frac(-2 * (1 - a), m, "C", n), 2 * m};
        }
        case FamilyId::bessel3: {
            const Rational a = param("alpha");
            const Rational m = n + a - 2;
            return Polynomial{frac(-2 * (1 - a), m, "C", n), 2 * m};
        }
        case FamilyId::bessel4: {
            const Rational a = param("alpha");
            const Rational m = n - 1 + a;
            return Polynomial{frac(Rational(-2), m, "C", n), 2 * m};
        }
        case FamilyId::jacobi1: {
            const Rational t = param("tau"), a = param("alpha"), bb = param("beta");
            const Rational s = 2 * t + a + bb, d = a * a - bb * bb;
            const Rational m = 2 * n + s;
            return Polynomial{frac(-d, m, "C", n), m};
        }
        case FamilyId::jacobi2: {
            const Rational a = param("alpha"), bb = param("beta");
            const Rational m = 2 * (n - 1) + a + bb;
            return Polynomial{frac(a * a - bb * bb, m, "C", n), m};
        }
    }
    throw std::logic_error("unreachable");
}

Polynomial Family::D_raw(int n) const {
    if (n < 0) throw std::invalid_argument("D: n must be >= 0");
    const Rational rho = param("rho");
    if (n == 0) {
        switch (id_) {
            case FamilyId::hermite1: return Polynomial(-2 / rho);
            case FamilyId::hermite2: return Polynomial();
            case FamilyId::laguerre1: return Polynomial(-1 / rho);
            case FamilyId::laguerre2: return Polynomial();
            case FamilyId::bessel1: {
                const Rational t = param("tau"), a = param("alpha");
                return Polynomial((2 * t + 2 * a - 1) / rho);
            }
            case FamilyId::bessel2: return Polynomial();
            case FamilyId::bessel3: return Polynomial();
            case FamilyId::bessel4: {
                const Rational a = param("alpha");
                return Polynomial((2 * a - 1) / rho);
            }
            case FamilyId::jacobi1: {
                const Rational t = param("tau"), a = param("alpha"), bb = param("beta");
                return Polynomial((2 * t + a + bb + 1) / rho);
            }
            case FamilyId::jacobi2: return Polynomial();
        }
    }
    switch (id_) {
        case FamilyId::hermite1:
        case FamilyId::hermite2:
            return Polynomial(-2);
        case FamilyId::laguerre1:
        case FamilyId::laguerre2:
            return Polynomial(-1);
        case FamilyId::bessel1: {
            const Rational t = param("tau"), a = param("alpha");
            return Polynomial(2 * (Rational(n - 1) + t + a) + 1);
        }
        case FamilyId::bessel2: {
            const Rational a = param("alpha");
            return Polynomial(2 * Rational(n) - 2 * a + 1);
        }
        case FamilyId::bessel3: {
            const Rational a = param("alpha");
            return Polynomial(2 * Rational(n) + 2 * a - 3);
        }
        case FamilyId::bessel4: {
            const Rational a = param("alpha");
            return Polynomial(2 * Rational(n) + 2 * a - 1);
        }
        case FamilyId::jacobi1: {
            const Rational t = param("tau"), a = param("alpha"), bb = param("beta");
            return Polynomial(2 * Rational(n) + 2 * t + a + bb + 1);
        }
        case FamilyId::jacobi2: {
            const Rational a = param("alpha"), bb = param("beta");
            return Polynomial(2 * Rational(n - 1) + a + bb + 1);
        }
    }
    throw std::logic_error("unreachable");
}

Rational Family::beta(int n) const {
    Rational v = beta_raw(n);
    if (perturb_ == PerturbTarget::beta && n == perturb_index_) v += kOne;
    return v;
}

Rational Family::gamma(int n) const {
    Rational v = gamma_raw(n);
    if (perturb_ == PerturbTarget::gamma && n == perturb_index_) v += kOne;
    if (v.is_zero()) throw RegularityError("gamma(" + std::to_string(n) + ") != 0", n);
    return v;
}

Polynomial Family::C(int n) const {
    Polynomial p = C_raw(n);
    if (perturb_ == PerturbTarget::C && n == perturb_index_) p += Polynomial(1);
    return p;
}

Polynomial Family::D(int n) const {
    Polynomial p = D_raw(n);
    if (perturb_ == PerturbTarget::D && n == perturb_index_) p += Polynomial(1);
    return p;
}

Family Family::perturbed(PerturbTarget target, int index) const {
    Family f(*this);
    f.perturb_ = target;
    f.perturb_index_ = index;
    if (target == PerturbTarget::phi) f.phi_ += Polynomial(1);
    if (target == PerturbTarget::psi) f.psi_ += Polynomial(1);
    if (target == PerturbTarget::B) f.B_ += Polynomial(1);
    return f;
}

void Family::validate(int n_max) const {
    auto nonzero_over = [&](const Rational& base, const Rational& step, int from, int to,
                            const std::string& cond) {
        for (int n = from; n <= to; ++n) {
            if ((base + Rational(n) * step).is_zero()) throw RegularityError(cond, n);
        }
    };
    const int N = std::max(n_max, 1);
    switch (id_) {
        case FamilyId::hermite1:
            nonzero_over(param("tau"), kOne, 1, N, "tau != -n, n >= 1");
            break;
        case FamilyId::hermite2:
            break;
        case FamilyId::laguerre1:
            nonzero_over(param("alpha") + param("tau") + 1, kOne, 0, N,
                         "alpha + tau != -(n+1), n >= 0");
            nonzero_over(param("tau") + 1, kOne, 0, N, "tau != -(n+1), n >= 0");
            break;
        case FamilyId::laguerre2:
            nonzero_over(param("alpha"), kOne, 1, N, "alpha != -n, n >= 1");
            break;
        case FamilyId::bessel1:
            nonzero_over(param("tau") + 1, kOne, 0, N, "tau + 1 != -n, n >= 0");
            nonzero_over(param("tau") + 2 * param("alpha") - 1, kOne, 0, N,
                         "tau + 2 alpha - 1 != -n, n >= 0");
            nonzero_over(2 * (param("tau") + param("alpha")), kOne, 0, 2 * N + 2,
                         "tau + alpha != -n/2, n >= 0");
            break;
        case FamilyId::bessel2:
            nonzero_over(2 * param("alpha") - 3, Rational(-1), 0, 2 * N + 2,
                         "alpha != (n+3)/2, n >= 0");
            break;
        case FamilyId::bessel3:
            nonzero_over(2 * param("alpha") - 1, kOne, 0, 2 * N + 2,
                         "alpha != (1-n)/2, n >= 0");
            break;
        case FamilyId::bessel4:
            nonzero_over(2 * param("alpha") - 1, kOne, -1, 2 * N + 2,
                         "alpha != (1-n)/2, n >= -1");
            break;
        case FamilyId::jacobi1:
            nonzero_over(param("tau") + 1, kOne, 0, N, "tau != -n-1, n >= 0");
            nonzero_over(param("tau") + param("alpha") + 1, kOne, 0, N,
                         "tau + alpha != -n-1, n >= 0");
            nonzero_over(param("tau") + param("beta") + 1, kOne, 0, N,
                         "tau + beta != -n-1, n >= 0");
            nonzero_over(2 * param("tau") + param("alpha") + param("beta"), kOne, 0, 2 * N + 4,
                         "2 tau + alpha + beta != -n, n >= 0");
            break;
        case FamilyId::jacobi2:
            nonzero_over(param("alpha"), kOne, 1, N, "alpha != -n, n >= 1");
            nonzero_over(param("beta"), kOne, 1, N, "beta != -n, n >= 1");
            nonzero_over(param("alpha") + param("beta"), kOne, 1, 2 * N + 4,
                         "alpha + beta != -n, n >= 1");
            break;
    }
    // Table denominators and nonzero gammas over the requested range.
    for (int n = 0; n <= n_max; ++n) (void)beta(n);
    for (int n = 1; n <= n_max; ++n) (void)gamma(n);
}

std::tuple<Polynomial, Polynomial, Polynomial> affine_shift(const Family& fam, const Rational& a,
                                                            const Rational& b) {
    if (a.is_zero()) throw std::invalid_argument("affine_shift: a must be nonzero");
    const int t = fam.phi().degree();
    Rational a_mt(1);  // a^{-t}
    for (int i = 0; i < t; ++i) a_mt /= a;
    return {a_mt * fam.phi().compose_affine(a, b), (a_mt * a) * fam.psi().compose_affine(a, b),
            a_mt * fam.B().compose_affine(a, b)};
}

RecurrenceCoeffs coeffs(const Family& fam) {
    return {[fam](int n) { return fam.beta(n); }, [fam](int n) { return fam.gamma(n); }};
}

RecurrenceCoeffs classical_hermite() {
    return {[](int) { return Rational(0); }, [](int n) { return Rational(n) / kTwo; }};
}

RecurrenceCoeffs classical_laguerre(const Rational& alpha) {
    return {[alpha](int n) { return 2 * Rational(n) + alpha + 1; },
            [alpha](int n) { return Rational(n) * (Rational(n) + alpha); }};
}

RecurrenceCoeffs classical_bessel(const Rational& alpha) {
    auto denom_ok = [alpha](const Rational& d, int n) {
        if (d.is_zero()) throw RegularityError("bessel reference: alpha != -n/2", n);
        return d;
    };
    return {[alpha, denom_ok](int n) {
                const Rational d = denom_ok((n + alpha - 1) * (n + alpha), n);
                return (1 - alpha) / d;
            },
            [alpha, denom_ok](int n) {
                // gamma(n) = gamma_{(m)+1} at m = n-1
                const Rational m(n - 1);
                const Rational d = denom_ok(
                    (2 * m + 2 * alpha - 1) * (m + alpha) * (m + alpha) * (2 * m + 2 * alpha + 1),
                    n);
                return -(m + 1) * (m + 2 * alpha - 1) / d;
            }};
}

RecurrenceCoeffs classical_jacobi(const Rational& alpha, const Rational& beta) {
    const Rational s = alpha + beta;
    const Rational d = alpha * alpha - beta * beta;
    auto denom_ok = [](const Rational& v, int n) {
        if (v.is_zero()) throw RegularityError("jacobi reference: alpha + beta != -n", n);
        return v;
    };
    return {[s, d, denom_ok](int n) {
                return d / denom_ok((2 * n + s) * (2 * n + s + 2), n);
            },
            [s, alpha, beta, denom_ok](int n) {
                const Rational m(n - 1);
                const Rational den =
                    denom_ok((2 * m + s + 1) * (2 * m + s + 2) * (2 * m + s + 2) * (2 * m + s + 3),
                             n);
                return 4 * (m + 1) * (m + 1 + s) * (m + 1 + alpha) * (m + 1 + beta) / den;
            }};
}

RecurrenceCoeffs associated(const RecurrenceCoeffs& rc, int r) {
    if (r < 0) throw std::invalid_argument("associated: order must be >= 0");
    return {[rc, r](int n) { return rc.beta(n + r); }, [rc, r](int n) { return rc.gamma(n + r); }};
}

RecurrenceCoeffs dilated(const RecurrenceCoeffs& rc, const Rational& a) {
    if (a.is_zero()) throw std::invalid_argument("dilated: a must be nonzero");
    return {[rc, a](int n) { return rc.beta(n) / a; },
            [rc, a](int n) { return rc.gamma(n) / (a * a); }};
}

RecurrenceCoeffs perturbed(const RecurrenceCoeffs& rc, const Rational& mu0,
                           const std::vector<Rational>& mu, const std::vector<Rational>& lam) {
    if (mu.size() != lam.size())
        throw std::invalid_argument("perturbed: mu and lambda must have equal length r");
    for (const auto& l : lam)
        if (l.is_zero()) throw RegularityError("perturbation lambda_n != 0", -1);
    const int r = static_cast<int>(mu.size());
    return {[rc, mu0, mu, r](int n) {
                if (n == 0) return rc.beta(0) + mu0;
                if (n <= r) return rc.beta(n) + mu[n - 1];
                return rc.beta(n);
            },
            [rc, lam, r](int n) {
                if (n >= 1 && n <= r) return lam[n - 1] * rc.gamma(n);
                return rc.gamma(n);
            }};
}

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Whole-word substitution so "beta" does not clobber "beta_0".
std::string substitute(std::string text, const ParamMap& subst) {
    for (const auto& [k, v] : subst) {
        const std::string repl = "(" + v.str() + ")";
        size_t pos = 0;
        while ((pos = text.find(k, pos)) != std::string::npos) {
            const bool left_ok = pos == 0 || !ident_char(text[pos - 1]);
            const size_t end = pos + k.size();
            const bool right_ok = end >= text.size() || !ident_char(text[end]);
            if (left_ok && right_ok) {
                text.replace(pos, k.size(), repl);
                pos += repl.size();
            } else {
                pos = end;
            }
        }
    }
    return text;
}

}  // namespace

TableRows table_rows(FamilyId id, const ParamMap& subst) {
    TableRows t;
    switch (id) {
        case FamilyId::hermite1:
            t.regularity = "rho != 0; tau != -n, n >= 1";
            t.recurrence = {"beta_0 = lambda", "beta_{n+1} = 0, n >= 0",
                            "gamma_1 = rho*(tau+1)/2", "gamma_{n+1} = (n+tau+1)/2, n >= 1"};
            t.functional_equation = {"Phi(x) = 1", "psi(x) = 2*(2-rho)/rho*x - 4*lambda/rho",
                                     "B(x) = 2*(rho-1)/rho*x^2 + 2*lambda*(2-rho)/rho*x + 1 - "
                                     "rho*(tau+1) - 2*lambda^2/rho"};
            t.structure = {"C_0(x) = 2*(rho-2)/rho*x + 4*lambda/rho", "D_0(x) = -2/rho",
                           "C_{n+1}(x) = -2x, n >= 0", "D_{n+1}(x) = -2, n >= 0"};
            break;
        case FamilyId::hermite2:
            t.regularity = "rho != 0";
            t.recurrence = {"beta_0 = lambda", "beta_{n+1} = 0, n >= 0", "gamma_1 = rho/2",
                            "gamma_{n+1} = n/2, n >= 1"};
            t.functional_equation = {"Phi(x) = 1", "psi(x) = -2x",
                                     "B(x) = 2x^2 - 2*lambda*x + 1 - rho"};
            t.structure = {"C_0(x) = 2x", "D_0(x) = 0", "C_{n+1}(x) = -2x, n >= 0",
                           "D_{n+1}(x) = -2, n >= 0"};
            break;
        case FamilyId::laguerre1:
            t.regularity = "rho != 0; alpha + tau != -(n+1), tau != -(n+1), n >= 0";
            t.recurrence = {"beta_0 = 2*tau + alpha + 1 + lambda",
                            "beta_{n+1} = 2*(n+tau+1) + alpha + 1, n >= 0",
                            "gamma_1 = rho*(1+tau)*(tau+alpha+1)",
                            "gamma_{n+1} = (n+tau+1)*(n+tau+alpha+1), n >= 1"};
            t.functional_equation = {
                "Phi(x) = x",
                "psi(x) = (2-rho)/rho*x + (rho-2)/rho*(2*tau+alpha+1) - 2*lambda/rho",
                "B(x) = (rho-1)/rho*x^2 + (2*(1-rho)/rho*(2*tau+alpha+1) + "
                "lambda*(2-rho)/rho)*x + (2*tau+alpha+1+lambda)*((rho-1)/rho*(2*tau+alpha+1) + 1 "
                "- lambda/rho) - rho*(tau+1)*(tau+alpha+1)"};
            t.structure = {"C_0(x) = (rho-2)/rho*(x - 2*tau - alpha - 1) + 2*lambda/rho - 1",
                           "D_0(x) = -1/rho", "C_{n+1}(x) = -x + alpha + 2*(n+tau+1), n >= 0",
                           "D_{n+1}(x) = -1, n >= 0"};
            break;
        case FamilyId::laguerre2:
            t.regularity = "rho != 0; alpha != -n, n >= 1";
            t.recurrence = {"beta_0 = alpha - 1 + lambda", "beta_{n+1} = 2n + alpha + 1, n >= 0",
                            "gamma_1 = rho", "gamma_{n+1} = n*(n+alpha), n >= 1"};
            t.functional_equation = {"Phi(x) = x", "psi(x) = -x + alpha - 1",
                                     "B(x) = x^2 + (2*(1-alpha) - lambda)*x + alpha*(alpha-1+"
                                     "lambda) - rho"};
            t.structure = {"C_0(x) = x - alpha", "D_0(x) = 0",
                           "C_{n+1}(x) = -x + alpha + 2n, n >= 0", "D_{n+1}(x) = -1, n >= 0"};
            break;
        case FamilyId::bessel1:
            t.regularity =
                "rho != 0; tau + 1 != -n, tau + 2*alpha - 1 != -n, tau + alpha != -n/2, n >= 0";
            t.recurrence = {
                "beta_0 = (1-alpha)/((tau+alpha)*(tau+alpha-1)) + lambda",
                "beta_{n+1} = (1-alpha)/((n+tau+alpha)*(n+tau+alpha+1)), n >= 0",
                "gamma_1 = "
                "-rho*(tau+1)*(tau+2*alpha-1)/((2*tau+2*alpha-1)*(tau+alpha)^2*(2*tau+2*alpha+1))",
                "gamma_{n+1} = -(n+tau+1)*(n+tau+2*alpha-1)/((2*n+2*tau+2*alpha-1)*(n+tau+alpha)^2"
                "*(2*n+2*tau+2*alpha+1)), n >= 1"};
            t.functional_equation = {
                "Phi(x) = x^2",
                "psi(x) = 2*((1-rho)/rho + (rho-2)/rho*(tau+alpha))*x + "
                "2/rho*(2*(tau+alpha)-1)*beta_0 - 2*(1-alpha)/(tau+alpha)",
                "B(x) = (1-rho)/rho*(2*(tau+alpha)-1)*x^2 + 2*((1-alpha)/(tau+alpha) + "
                "beta_0*((tau+alpha)*(rho-2)/rho + 1/rho))*x + "
                "(2*tau+2*alpha-1)/rho*beta_0^2 + 2*(alpha-1)/(tau+alpha)*beta_0 - "
                "rho*(tau+1)*(tau+2*alpha-1)/((2*(tau+alpha)-1)*(tau+alpha)^2)"};
            t.structure = {
                "C_0(x) = 2*((tau+alpha)*(2/rho - 1) - 1/rho)*x - 2/rho*(2*(tau+alpha)-1)*beta_0 "
                "- 2*(alpha-1)/(tau+alpha)",
                "D_0(x) = (2*tau+2*alpha-1)/rho",
                "C_{n+1}(x) = (2n + 2*(tau+alpha))*x - 2*(1-alpha)/(n+tau+alpha), n >= 0",
                "D_{n+1}(x) = 2*(n+tau+alpha) + 1, n >= 0"};
            break;
        case FamilyId::bessel2:
            t.regularity = "rho != 0; alpha != (n+3)/2, n >= 0";
            t.recurrence = {"beta_0 = lambda",
                            "beta_{n+1} = (1-alpha)/((n+1-alpha)*(n+2-alpha)), n >= 0",
                            "gamma_1 = rho",
                            "gamma_{n+1} = "
                            "-n*(n+2-2*alpha)/((2*n+1-2*alpha)*(n+1-alpha)^2*(2*n+3-2*alpha)), "
                            "n >= 1"};
            t.functional_equation = {"Phi(x) = x^2", "psi(x) = -2*alpha*x - 2",
                                     "B(x) = (2*alpha-1)*x^2 + (2*(1-alpha)*lambda + 2)*x - "
                                     "2*lambda - rho*(2*alpha-3)"};
            t.structure = {"C_0(x) = 2*(alpha-1)*x + 2",
                           "C_{n+1}(x) = 2*(n-alpha+1)*x - 2*(1-alpha)/(n-alpha+1), n >= 0",
                           "D_0(x) = 0", "D_{n+1}(x) = 2n - 2*alpha + 3, n >= 0"};
            break;
        case FamilyId::bessel3:
            t.regularity = "rho != 0; alpha != (1-n)/2, n >= 0";
            t.recurrence = {"beta_0 = lambda",
                            "beta_{n+1} = (1-alpha)/((n+alpha-1)*(n+alpha)), n >= 0",
                            "gamma_1 = rho",
                            "gamma_{n+1} = "
                            "-n*(n+2*alpha-2)/((2*n+2*alpha-3)*(n+alpha-1)^2*(2*n+2*alpha-1)), "
                            "n >= 1"};
            t.functional_equation = {"Phi(x) = x^2", "psi(x) = 2*(alpha-2)*x + 2",
                                     "B(x) = -(2*alpha-3)*x^2 + 2*((alpha-1)*lambda - 1)*x + "
                                     "2*lambda + rho*(2*alpha-1)"};
            t.structure = {"C_0(x) = 2*(1-alpha)*x - 2",
                           "C_{n+1}(x) = 2*(n+alpha-1)*x - 2*(1-alpha)/(n+alpha-1), n >= 0",
                           "D_0(x) = 0", "D_{n+1}(x) = 2n + 2*alpha - 1, n >= 0"};
            break;
        case FamilyId::bessel4:
            t.regularity = "rho != 0; alpha != (1-n)/2, n >= -1";
            t.recurrence = {
                "beta_0 = 1/((alpha-1)*alpha) + lambda",
                "beta_{n+1} = 1/((n+alpha)*(n+alpha+1)), n >= 0",
                "gamma_1 = rho/((2*alpha-1)*alpha^2*(2*alpha+1))",
                "gamma_{n+1} = 1/((2*n+2*alpha-1)*(n+alpha)^2*(2*n+2*alpha+1)), n >= 1"};
            t.functional_equation = {
                "Phi(x) = x^2",
                "psi(x) = 2*((1-rho)/rho + alpha*(rho-2)/rho)*x + 2/rho*(2*alpha-1)*beta_0 - "
                "2/alpha",
                "B(x) = (rho-1)/rho*(1-2*alpha)*x^2 + 2*((alpha + (1-2*alpha)/rho)*beta_0 + "
                "1/alpha)*x + (2*alpha-1)/rho*beta_0^2 - 2*beta_0/alpha + "
                "rho/((2*alpha-1)*alpha^2)"};
            t.structure = {
                "C_0(x) = 2*((2-rho)/rho*alpha - 1/rho)*x - 2/rho*(2*alpha-1)*beta_0 + 2/alpha",
                "C_{n+1}(x) = 2*(n+alpha)*x - 2/(n+alpha), n >= 0",
                "D_0(x) = (2*alpha-1)/rho", "D_{n+1}(x) = 2n + 2*alpha + 1, n >= 0"};
            break;
        case FamilyId::jacobi1:
            t.regularity =
                "rho != 0; tau != -n-1, tau + alpha != -n-1, tau + beta != -n-1, "
                "2*tau + alpha + beta != -n, n >= 0";
            t.recurrence = {
                "beta_0 = (alpha^2-beta^2)/((alpha+beta+2*tau+2)*(alpha+beta+2*tau)) + lambda",
                "beta_{n+1} = (alpha^2-beta^2)/((2*n+alpha+beta+2*tau+2)*(2*n+alpha+beta+2*tau+4))"
                ", n >= 0",
                "gamma_1 = 4*rho*(tau+1)*(tau+alpha+beta+1)*(tau+alpha+1)*(tau+beta+1)/"
                "((2*tau+alpha+beta+1)*(2*tau+alpha+beta+2)^2*(2*tau+alpha+beta+3))",
                "gamma_{n+1} = 4*(n+tau+1)*(n+tau+alpha+beta+1)*(n+tau+alpha+1)*(n+tau+beta+1)/"
                "((2*n+2*tau+alpha+beta+1)*(2*n+2*tau+alpha+beta+2)^2*(2*n+2*tau+alpha+beta+3)), "
                "n >= 1"};
            t.functional_equation = {
                "Phi(x) = x^2 - 1",
                "psi(x) = ((rho-2)/rho*(2*tau+alpha+beta+1) - 1)*x + "
                "2/rho*(2*tau+alpha+beta+1)*beta_0 - (alpha^2-beta^2)/(2*tau+alpha+beta+2)",
                "B(x) = (1-rho)/rho*(2*tau+alpha+beta+1)*x^2 + "
                "(((rho-2)/rho*(2*tau+alpha+beta) + 2*(rho-1)/rho)*beta_0 + "
                "(alpha^2-beta^2)/(2*tau+alpha+beta+2))*x + (2*tau+alpha+beta+3)*gamma_1 - 1 + "
                "1/rho*(2*tau+alpha+beta+1)*beta_0^2 - "
                "(alpha^2-beta^2)/(2*tau+alpha+beta+2)*beta_0"};
            t.structure = {
                "C_0(x) = ((2-rho)/rho*(2*tau+alpha+beta+1) - 1)*x - "
                "2/rho*(2*tau+alpha+beta+1)*beta_0 + (alpha^2-beta^2)/(2*tau+alpha+beta+2)",
                "C_{n+1}(x) = (2*n+2*tau+alpha+beta+2)*x - "
                "(alpha^2-beta^2)/(2*n+2*tau+alpha+beta+2), n >= 0",
                "D_0(x) = (2*tau+alpha+beta+1)/rho",
                "D_{n+1}(x) = 2*n+2*tau+alpha+beta+3, n >= 0"};
            break;
        case FamilyId::jacobi2:
            t.regularity = "rho != 0; alpha != -n, beta != -n, alpha + beta != -n, n >= 1";
            t.recurrence = {
                "beta_0 = lambda",
                "beta_{n+1} = -(alpha^2-beta^2)/((2*n+alpha+beta)*(2*n+alpha+beta+2)), n >= 0",
                "gamma_1 = rho",
                "gamma_{n+1} = 4*n*(n+alpha+beta)*(n+alpha)*(n+beta)/"
                "((2*n+alpha+beta-1)*(2*n+alpha+beta)^2*(2*n+alpha+beta+1)), n >= 1"};
            t.functional_equation = {
                "Phi(x) = x^2 - 1", "psi(x) = (alpha+beta-2)*x + alpha - beta",
                "B(x) = (1-alpha-beta)*x^2 + ((alpha+beta)*lambda + beta - alpha)*x + "
                "(alpha-beta)*lambda - 1 + rho*(1+alpha+beta)"};
            t.structure = {
                "C_0(x) = -(alpha+beta)*x + beta - alpha",
                "C_{n+1}(x) = (2*n+alpha+beta)*x + (alpha^2-beta^2)/(2*n+alpha+beta), n >= 0",
                "D_0(x) = 0", "D_{n+1}(x) = 2*n+alpha+beta+1, n >= 0"};
            break;
    }
    t.caption = family_caption(id);
    if (!subst.empty()) {
        t.regularity = substitute(t.regularity, subst);
        for (auto& row : t.recurrence) row = substitute(row, subst);
        for (auto& row : t.functional_equation) row = substitute(row, subst);
        for (auto& row : t.structure) row = substitute(row, subst);
    }
    return t;
}

}  // namespace lhkit
