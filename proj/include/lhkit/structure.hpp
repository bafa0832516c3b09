#ifndef LHKIT_STRUCTURE_HPP
#define LHKIT_STRUCTURE_HPP

#include <string>
#include <vector>

#include "lhkit/family.hpp"
#include "lhkit/forms.hpp"
#include "lhkit/mops.hpp"
#include "lhkit/polynomial.hpp"

namespace lhkit {

/// Structure-relation coefficient pair at one index, deg C_n <= 1 and
/// deg D_n <= 0 in the class-zero setting.
struct CDPair {
    int n = 0;
    Polynomial C, D;
};

/// Closed forms for the structure coefficients:
///   C_0 = -phi' - psi,                      D_0 = -(c2 + b2 + a1),
///   C_{n+1} = (2n c2 - (a1+2b2)) x + beta_{n+1}((a1+2b2) - 2(n+1)c2) - c1,
///   D_{n+1} = (2n+1) c2 - (a1 + 2b2).
Polynomial C_closed(const Family& fam, int n);
Polynomial D_closed(const Family& fam, int n);

/// Residual of the main structure relation
///   phi P'_{n+1} - B P^(1)_n - 1/2 (C_{n+1} - C_0) P_{n+1}
///   + gamma_{n+1} D_{n+1} P_n
/// with the family's table coefficients; the zero polynomial on success.
Polynomial verify_R4(const Family& fam, int n);

/// Runs C_{n+1} = -C_n + 2(x - beta_n) D_n and
/// gamma_{n+1} D_{n+1} = -phi + gamma_n D_{n-1} - (x - beta_n) C_n
/// + (x - beta_n)^2 D_n from C_0 = -phi' - psi, D_0 from moments,
/// D_{-1} = B, gamma_0 = 1. Returns pairs for n = 0..N.
std::vector<CDPair> run_CD_recurrence(const Family& fam, int N);

/// One verified equation: both sides rendered exactly so mismatches can be
/// reported verbatim.
struct EquationCheck {
    std::string name;
    int n = -1;  // -1 when not index-specific
    bool pass = false;
    std::string lhs, rhs;
};

struct SystemReport {
    std::vector<EquationCheck> checks;
    Rational r0;
    bool all_pass = true;
    void add(const std::string& name, int n, const Rational& lhs, const Rational& rhs);
    void add(const std::string& name, int n, const Polynomial& lhs, const Polynomial& rhs);
};

/// Checks, for n = 0..N where applicable: the two r0 expressions, the beta
/// and gamma recurrences of the class-zero system, E_n and F_n, the moment
/// identities psi(beta_0) + B'(beta_0) = 0 and
/// phi(beta_0) - B(beta_0) = gamma_1 (a1 + 2 b2 - c2), and the case
/// invariants (mu, R^2 for the x^2 families; T for the x^2 - 1 families).
SystemReport verify_system(const Family& fam, int N);

struct ClassZeroRoot {
    Rational root;
    Rational B_at, C_at, D_at;
    bool all_vanish = false;
};

struct ClassZeroReport {
    std::vector<ClassZeroRoot> roots;  // rational zeros of phi
    bool class_zero = true;            // no root annihilates (B, C, D)
};

/// Class-zero criterion: for each rational root c of phi (phi is one of
/// 1, x, x^2, x^2 - 1), reports (B(c), C(c), D(c)) with C = -phi' - psi and
/// D recovered from moments. Class zero holds iff no root kills all three.
ClassZeroReport class_zero_criterion(const Family& fam);

/// Basis expansion of phi P'_{n+1} - B P^(1)_n; class zero forces the
/// support into the window [n, n+2]. Returns all coefficients theta_mu,
/// mu = 0..n+2.
std::vector<Rational> window_structure_check(const Family& fam, int n);

}  // namespace lhkit

#endif
