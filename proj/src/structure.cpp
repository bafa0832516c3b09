#include "lhkit/structure.hpp"

#include <stdexcept>

namespace lhkit {

Polynomial C_closed(const Family& fam, int n) {
    if (n == 0) return -fam.phi().derivative() - fam.psi();
    const Rational s = fam.a1() + 2 * fam.b2();
    const int m = n - 1;  // table index: C_{m+1}
    const Rational lead = 2 * Rational(m) * fam.c2() - s;
    const Rational cst = fam.beta(n) * (s - 2 * Rational(m + 1) * fam.c2()) - fam.c1();
    return Polynomial{cst, lead};
}

Polynomial D_closed(const Family& fam, int n) {
    if (n == 0) return Polynomial(-(fam.c2() + fam.b2() + fam.a1()));
    const int m = n - 1;
    return Polynomial(Rational(2 * m + 1) * fam.c2() - (fam.a1() + 2 * fam.b2()));
}

Polynomial verify_R4(const Family& fam, int n) {
    const PolySeq P = generate(fam, n + 2);
    const PolySeq P1 = generate(associated(fam, 1), n + 1);
    const Rational half(1, 2);
    const Polynomial lhs = fam.phi() * P[n + 1].derivative() - fam.B() * P1[n];
    const Polynomial rhs =
        half * (fam.C(n + 1) - fam.C(0)) * P[n + 1] - fam.gamma(n + 1) * fam.D(n + 1) * P[n];
    return lhs - rhs;
}

std::vector<CDPair> run_CD_recurrence(const Family& fam, int N) {
    std::vector<CDPair> out;
    out.reserve(N + 1);
    Polynomial C_prev = -fam.phi().derivative() - fam.psi();
    Polynomial D_prevprev = fam.B();  // D_{-1}
    Polynomial D_prev = D0_from_moments(fam);
    out.push_back({0, C_prev, D_prev});
    const Polynomial X = Polynomial::x();
    Rational gamma_n(1);  // gamma_0 = 1 feeds the n = 0 step
    for (int n = 0; n < N; ++n) {
        const Polynomial xb = X - Polynomial(fam.beta(n));
        const Polynomial C_next = -C_prev + 2 * xb * D_prev;
        const Rational g_np1 = fam.gamma(n + 1);
        const Polynomial D_next =
            (g_np1.inverse()) * (-fam.phi() + gamma_n * D_prevprev - xb * C_prev + xb * xb * D_prev);
        out.push_back({n + 1, C_next, D_next});
        D_prevprev = D_prev;
        D_prev = D_next;
        C_prev = C_next;
        gamma_n = g_np1;
    }
    return out;
}

void SystemReport::add(const std::string& name, int n, const Rational& lhs, const Rational& rhs) {
    EquationCheck c;
    c.name = name;
    c.n = n;
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.pass = lhs == rhs;
    if (!c.pass) all_pass = false;
    checks.push_back(std::move(c));
}

void SystemReport::add(const std::string& name, int n, const Polynomial& lhs,
                       const Polynomial& rhs) {
    EquationCheck c;
    c.name = name;
    c.n = n;
    c.lhs = lhs.str();
    c.rhs = rhs.str();
    c.pass = lhs == rhs;
    if (!c.pass) all_pass = false;
    checks.push_back(std::move(c));
}

SystemReport verify_system(const Family& fam, int N) {
    SystemReport rep;
    const Rational c2 = fam.c2(), c1 = fam.c1(), c0 = fam.c0();
    const Rational a1 = fam.a1(), b2 = fam.b2(), b1 = fam.b1();
    const Rational beta0 = fam.beta(0), gamma1 = fam.gamma(1);
    const Rational r0 = fam.r0();
    rep.r0 = r0;
    (void)c0;

    // r_0 two ways.
    rep.add("r0 = (phi(beta0) - B(beta0))/gamma1", -1,
            (fam.phi()(beta0) - fam.B()(beta0)) / gamma1, r0);

    // Moment identities from the functional equation at n = 0 and n = 1.
    rep.add("psi(beta0) + B'(beta0) = 0", -1, fam.psi()(beta0) + fam.B().derivative()(beta0),
            Rational(0));
    rep.add("phi(beta0) - B(beta0) = gamma1 (a1 + 2 b2 - c2)", -1,
            fam.phi()(beta0) - fam.B()(beta0), gamma1 * (a1 + 2 * b2 - c2));

    // beta recurrences.
    rep.add("(c2 - r0) beta1 - (-3 c2 - r0 + 2 b2) beta0 + 2 c1 - b1 = 0", -1,
            (c2 - r0) * fam.beta(1) - (-3 * c2 - r0 + 2 * b2) * beta0 + 2 * c1 - b1, Rational(0));
    for (int n = 1; n < N; ++n) {
        rep.add("((2n+1) c2 - r0) beta_{n+1} - ((2n-3) c2 - r0) beta_n + 2 c1 = 0", n,
                (Rational(2 * n + 1) * c2 - r0) * fam.beta(n + 1) -
                    (Rational(2 * n - 3) * c2 - r0) * fam.beta(n) + 2 * c1,
                Rational(0));
    }

    // gamma recurrences.
    rep.add("(2 c2 - r0) gamma2 - (-2 c2 - r0 + b2) gamma1 + phi(beta1) = 0", -1,
            (2 * c2 - r0) * fam.gamma(2) - (-2 * c2 - r0 + b2) * gamma1 + fam.phi()(fam.beta(1)),
            Rational(0));
    for (int n = 1; n + 2 <= N; ++n) {
        rep.add("(2(n+1) c2 - r0) gamma_{n+2} - (2(n-1) c2 - r0) gamma_{n+1} + phi(beta_{n+1}) = 0",
                n,
                (Rational(2 * (n + 1)) * c2 - r0) * fam.gamma(n + 2) -
                    (Rational(2 * (n - 1)) * c2 - r0) * fam.gamma(n + 1) +
                    fam.phi()(fam.beta(n + 1)),
                Rational(0));
    }

    // E_n: half the gap between C_{n+1} and C_0 must be G_n x + E_n with
    // G_n = c2 (n+1) - b2 and E_n the partial-sum expression.
    const Rational half(1, 2);
    Rational beta_sum(0);
    for (int n = 0; n <= N; ++n) {
        beta_sum += fam.beta(n);
        const Rational Gn = c2 * Rational(n + 1) - b2;
        const Rational En = c2 * beta_sum + Rational(n + 1) * c1 - (b1 + beta0 * b2);
        rep.add("1/2 (C_{n+1} - C_0) = G_n x + E_n", n, half * (fam.C(n + 1) - fam.C(0)),
                Polynomial{En, Gn});
        // F_n = -gamma_{n+1} D_{n+1} = (r0 - 2 c2 n) gamma_{n+1}.
        rep.add("F_n = (r0 - 2 c2 n) gamma_{n+1}", n, -fam.gamma(n + 1) * fam.D(n + 1),
                Polynomial((r0 - 2 * Rational(n) * c2) * fam.gamma(n + 1)));
    }

    // Case invariants for the x^2 and x^2 - 1 settings.
    const Rational mu = (2 + a1) * beta0 - b1;
    if (fam.phi() == Polynomial::x() * Polynomial::x()) {
        const Rational R2 =
            mu * mu / 4 - gamma1 * (a1 + 2 * b2 - 1) * (a1 + b2 + 1);
        switch (fam.id()) {
            case FamilyId::bessel1:
                rep.add("R^2 != 0", -1, Rational(R2.is_zero() ? 0 : 1), Rational(1));
                rep.add("a1 + b2 + 1 != 0", -1, Rational((a1 + b2 + 1).is_zero() ? 0 : 1),
                        Rational(1));
                break;
            case FamilyId::bessel2:
                rep.add("R^2 = 1", -1, R2, Rational(1));
                rep.add("a1 + b2 + 1 = 0", -1, a1 + b2 + 1, Rational(0));
                rep.add("mu = -2", -1, mu, Rational(-2));
                rep.add("r0 = 2 alpha - 3", -1, r0, 2 * fam.param("alpha") - 3);
                break;
            case FamilyId::bessel3:
                rep.add("R^2 = 1", -1, R2, Rational(1));
                rep.add("a1 + b2 + 1 = 0", -1, a1 + b2 + 1, Rational(0));
                rep.add("mu = 2", -1, mu, Rational(2));
                rep.add("r0 = 1 - 2 alpha", -1, r0, 1 - 2 * fam.param("alpha"));
                break;
            case FamilyId::bessel4:
                rep.add("R^2 = 0", -1, R2, Rational(0));
                break;
            default:
                break;
        }
    }
    if (fam.id() == FamilyId::jacobi1 || fam.id() == FamilyId::jacobi2) {
        const Rational T = gamma1 * (a1 + 2 * b2 - 1) * (a1 + b2 + 1);
        if (fam.id() == FamilyId::jacobi1)
            rep.add("T != 0", -1, Rational(T.is_zero() ? 0 : 1), Rational(1));
        else
            rep.add("T = 0", -1, T, Rational(0));
    }
    return rep;
}

ClassZeroReport class_zero_criterion(const Family& fam) {
    ClassZeroReport rep;
    std::vector<Rational> roots;
    const Polynomial& phi = fam.phi();
    if (phi == Polynomial::x()) {
        roots = {Rational(0)};
    } else if (phi == Polynomial::x() * Polynomial::x()) {
        roots = {Rational(0)};
    } else if (phi == Polynomial::x() * Polynomial::x() - Polynomial(1)) {
        roots = {Rational(1), Rational(-1)};
    } else if (phi.degree() == 0) {
        // no zeros; vacuously class zero
    } else {
        throw std::invalid_argument("class_zero_criterion: unexpected phi");
    }

    const Polynomial C = -phi.derivative() - fam.psi();
    const Polynomial D = D0_from_moments(fam);
    for (const auto& c : roots) {
        ClassZeroRoot r;
        r.root = c;
        r.B_at = fam.B()(c);
        r.C_at = C(c);
        r.D_at = D(c);
        r.all_vanish = r.B_at.is_zero() && r.C_at.is_zero() && r.D_at.is_zero();
        if (r.all_vanish) rep.class_zero = false;
        rep.roots.push_back(std::move(r));
    }
    return rep;
}

std::vector<Rational> window_structure_check(const Family& fam, int n) {
    if (n < 1) throw std::invalid_argument("window_structure_check: n must be >= 1");
    const PolySeq P = generate(fam, n + 2);
    const PolySeq P1 = generate(associated(fam, 1), n);
    const Polynomial q = fam.phi() * P[n + 1].derivative() - fam.B() * P1[n];
    const MomentSeq u = moments_of(fam, 2 * (n + 2));
    return expand_in_basis(q, P, u);
}

}  // namespace lhkit
