#ifndef LHKIT_FAMILY_HPP
#define LHKIT_FAMILY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "lhkit/errors.hpp"
#include "lhkit/polynomial.hpp"
#include "lhkit/rational.hpp"

namespace lhkit {

enum class FamilyId {
    hermite1,
    hermite2,
    laguerre1,
    laguerre2,
    bessel1,
    bessel2,
    bessel3,
    bessel4,
    jacobi1,
    jacobi2,
};

const std::vector<FamilyId>& all_families();
std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

/// Names of the parameters each family takes (subset of lambda, rho, tau,
/// alpha, beta).
const std::vector<std::string>& family_params(FamilyId id);

/// Fault-injection hook: adds +1 to the chosen piece of a family, used by the
/// negative-control suites to confirm every check trips on a perturbed input.
enum class PerturbTarget { none, phi, psi, B, C, D, beta, gamma };

using ParamMap = std::map<std::string, Rational>;

/// One of the ten canonical class-zero families with concrete rational
/// parameters. Supplies the data every check consumes: phi/psi/B of the
/// functional equation, the recurrence coefficients beta_n and gamma_n, and
/// the structure-relation coefficients C_n, D_n. Immutable after
/// construction.
class Family {
public:
    /// Validates the parameter set (exactly the table's parameters, rho != 0)
    /// and materializes phi, psi, B. Throws std::invalid_argument on bad
    /// parameters and RegularityError on a violated table condition.
    static Family make(FamilyId id, const ParamMap& params);

    FamilyId id() const { return id_; }
    std::string name() const { return family_name(id_); }
    std::string caption() const;
    const ParamMap& params() const { return params_; }
    Rational param(const std::string& key) const;

    const Polynomial& phi() const { return phi_; }
    const Polynomial& psi() const { return psi_; }
    const Polynomial& B() const { return B_; }

    // Coefficients of phi = c2 x^2 + c1 x + c0, psi = a1 x + a0,
    // B = b2 x^2 + b1 x + b0.
    Rational c2() const { return phi_.coeff(2); }
    Rational c1() const { return phi_.coeff(1); }
    Rational c0() const { return phi_.coeff(0); }
    Rational a1() const { return psi_.coeff(1); }
    Rational a0() const { return psi_.coeff(0); }
    Rational b2() const { return B_.coeff(2); }
    Rational b1() const { return B_.coeff(1); }
    Rational b0() const { return B_.coeff(0); }

    /// Table recurrence coefficients. beta(n) for n >= 0, gamma(n) for
    /// n >= 1. Throws RegularityError when a denominator vanishes or a gamma
    /// is zero.
    Rational beta(int n) const;
    Rational gamma(int n) const;

    /// Table structure-relation coefficients C_n (deg <= 1) and D_n
    /// (deg <= 0), n >= 0.
    Polynomial C(int n) const;
    Polynomial D(int n) const;

    /// r0 = a1 + 2 b2 - c2.
    Rational r0() const { return a1() + Rational(2) * b2() - c2(); }

    /// Checks the table's printed regularity conditions and all
    /// denominators/gammas up to n_max. Throws RegularityError naming the
    /// condition and the smallest offending n.
    void validate(int n_max) const;

    Family perturbed(PerturbTarget target, int index = 0) const;
    PerturbTarget perturb_target() const { return perturb_; }

private:
    Family() = default;

    Rational beta_raw(int n) const;
    Rational gamma_raw(int n) const;
    Polynomial C_raw(int n) const;
    Polynomial D_raw(int n) const;

    FamilyId id_{};
    ParamMap params_;
    Polynomial phi_, psi_, B_;
    PerturbTarget perturb_ = PerturbTarget::none;
    int perturb_index_ = 0;
};

/// Shifted functional-equation triple: phi~(x) = a^-t phi(ax+b),
/// psi~(x) = a^(1-t) psi(ax+b), B~(x) = a^-t B(ax+b), t = deg phi.
/// Throws std::invalid_argument when a == 0.
std::tuple<Polynomial, Polynomial, Polynomial> affine_shift(const Family& fam, const Rational& a,
                                                            const Rational& b);

/// Monic recurrence coefficients of a reference sequence: beta(n) for n >= 0
/// and gamma(n) for n >= 1. Plain value type so shifted/dilated/perturbed
/// variants compose.
struct RecurrenceCoeffs {
    std::function<Rational(int)> beta;
    std::function<Rational(int)> gamma;
};

RecurrenceCoeffs coeffs(const Family& fam);

/// Classical reference families, reconstructed from the catalogue's
/// associated-sequence identities so the whole artifact is self-consistent.
RecurrenceCoeffs classical_hermite();
RecurrenceCoeffs classical_laguerre(const Rational& alpha);
RecurrenceCoeffs classical_bessel(const Rational& alpha);
RecurrenceCoeffs classical_jacobi(const Rational& alpha, const Rational& beta);

/// Associated sequence of order r: beta_n -> beta_{n+r}, gamma_n -> gamma_{n+r}.
RecurrenceCoeffs associated(const RecurrenceCoeffs& rc, int r);

/// Dilation h_a: beta_n / a, gamma_n / a^2 (a = -1 flips beta signs and
/// leaves gamma alone).
RecurrenceCoeffs dilated(const RecurrenceCoeffs& rc, const Rational& a);

/// r-perturbed coefficients: beta_0 += mu0; beta_n += mu[n-1] and
/// gamma_n *= lam[n-1] for 1 <= n <= r; untouched beyond. Zero lambda entries
/// are rejected.
RecurrenceCoeffs perturbed(const RecurrenceCoeffs& rc, const Rational& mu0,
                           const std::vector<Rational>& mu, const std::vector<Rational>& lam);

/// Markdown/CSV table regeneration support: the rows of one family's table,
/// as printable strings with parameters left as names. An optional
/// substitution map replaces parameter names by concrete rationals, and the
/// polynomial rows are then evaluated exactly.
struct TableRows {
    std::string caption;
    std::string regularity;
    std::vector<std::string> recurrence;
    std::vector<std::string> functional_equation;
    std::vector<std::string> structure;
};
TableRows table_rows(FamilyId id, const ParamMap& subst = {});

}  // namespace lhkit

#endif
