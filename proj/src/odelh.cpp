#include "lhkit/odelh.hpp"

#include <stdexcept>

#include "lhkit/errors.hpp"
#include "lhkit/linsolve.hpp"

namespace lhkit {

namespace {

const Rational kHalf(1, 2);

Polynomial xminus(const Rational& b) { return Polynomial{-b, Rational(1)}; }

}  // namespace

StructureRelation relation1_from_R4(const Family& fam, int n) {
    StructureRelation rel;
    rel.order = 1;
    rel.n = n;
    rel.G0 = Polynomial();
    rel.G1 = fam.B();
    rel.H = -fam.gamma(n + 1) * fam.D(n + 1);
    rel.M.resize(2);
    rel.M[0] = -kHalf * (fam.C(n + 1) - fam.C(0));
    rel.M[1] = fam.phi();
    return rel;
}

Polynomial verify_relation(const StructureRelation& rel, const Family& fam) {
    const int n = rel.n;
    const PolySeq P = generate(fam, n + 1);
    const PolySeq P1 = generate(associated(fam, 1), std::max(n, 0));
    const Polynomial& Pn1 = P[n + 1];

    Polynomial lhs = rel.G1 * P1[n] + rel.H * P[n];
    if (n >= 1) lhs += rel.G0 * P1[n - 1];  // P^(1)_{-1} = 0 at n = 0

    Polynomial rhs;
    Polynomial deriv = Pn1;
    for (size_t j = 0; j < rel.M.size(); ++j) {
        rhs += rel.M[j] * deriv;
        deriv = deriv.derivative();
    }
    return lhs - rhs;
}

namespace {

// Order-1 relation by direct degree-bounded fitting: unknowns are the
// coefficients of G1 (deg <= 2), H (deg <= 0), M0 (deg <= 1); the equations
// match the x-powers of G1 P^(1)_n + H P_n - M0 P_{n+1} = phi P'_{n+1}.
FitResult fit_order1(const Family& fam, int n) {
    const PolySeq P = generate(fam, n + 1);
    const PolySeq P1 = generate(associated(fam, 1), n);
    const Polynomial target = fam.phi() * P[n + 1].derivative();

    struct Col {
        const Polynomial* base;
        int shift;
        int sign;
    };
    // Unknown layout: G1_0..G1_2, H_0, M0_0, M0_1.
    std::vector<Col> cols;
    for (int i = 0; i <= 2; ++i) cols.push_back({&P1[n], i, +1});
    cols.push_back({&P[n], 0, +1});
    for (int i = 0; i <= 1; ++i) cols.push_back({&P[n + 1], i, -1});

    const int rows = n + 3;  // degrees 0..n+2
    Matrix A(rows, Vector(cols.size(), Rational(0)));
    Vector b(rows, Rational(0));
    for (int r = 0; r < rows; ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            const int src = r - cols[c].shift;
            A[r][c] = Rational(cols[c].sign) * cols[c].base->coeff(src);
        }
        b[r] = target.coeff(r);
    }

    const LinearSolution sol = solve_exact(A, b);
    if (!sol.consistent)
        throw NoSolutionError("fit_relation: degree bounds admit no order-1 relation at n=" +
                              std::to_string(n));

    auto to_rel = [&](const Vector& v) {
        StructureRelation rel;
        rel.order = 1;
        rel.n = n;
        rel.G0 = Polynomial();
        rel.G1 = Polynomial{v[0], v[1], v[2]};
        rel.H = Polynomial(v[3]);
        rel.M.resize(2);
        rel.M[0] = Polynomial{v[4], v[5]};
        rel.M[1] = fam.phi();
        return rel;
    };

    FitResult res;
    res.relation = to_rel(sol.particular);
    res.nullspace_dim = static_cast<int>(sol.nullspace.size());
    for (const auto& dir : sol.nullspace) {
        StructureRelation d = to_rel(dir);
        d.M[1] = Polynomial();  // homogeneous direction carries no phi term
        res.basis.push_back(std::move(d));
    }
    return res;
}

// One differentiation-elimination step: turns the order-k relation at index
// n into the order-(k+1) relation at the same index. Uses, at fixed n,
//   phi P'_{n+1}    = B P^(1)_n + 1/2 (C_{n+1}-C_0) P_{n+1}
//                     - gamma_{n+1} D_{n+1} P_n,
//   phi P'_n        = B P^(1)_{n-1} + [1/2 (C_n-C_0) - (x-beta_n) D_n] P_n
//                     + D_n P_{n+1},
//   phi P^(1)'_n    = [D_0 (x-beta_0) + 1/2 (C_{n+1}-C_1)] P^(1)_n
//                     - gamma_{n+1} D_{n+1} P^(1)_{n-1} - D_0 P_{n+1},
//   phi P^(1)'_{n-1}= [D_0 (x-beta_0) + 1/2 (C_n-C_1) - (x-beta_n) D_n]
//                     P^(1)_{n-1} + D_n P^(1)_n - D_0 P_n,
// all consequences of the main structure relation, the recurrence, and
// gamma_1 P^(2)_m = (x-beta_0) P^(1)_{m+1} - P_{m+2}.
StructureRelation raise_order(const StructureRelation& rel, const Family& fam) {
    const int n = rel.n;
    const Polynomial& phi = fam.phi();
    const Polynomial C0 = fam.C(0), C1 = fam.C(1), Cn = fam.C(n), Cn1 = fam.C(n + 1);
    const Polynomial D0 = fam.D(0), Dn = fam.D(n), Dn1 = fam.D(n + 1);
    const Rational g_np1 = fam.gamma(n + 1);
    const Polynomial xb0 = xminus(fam.beta(0));
    const Polynomial xbn = xminus(fam.beta(n));

    const Polynomial U00 = D0 * xb0 + kHalf * (Cn - C1) - xbn * Dn;
    const Polynomial U11 = D0 * xb0 + kHalf * (Cn1 - C1);
    const Polynomial U22 = kHalf * (Cn - C0) - xbn * Dn;

    StructureRelation out;
    out.order = rel.order + 1;
    out.n = n;
    out.G0 = phi * rel.G0.derivative() + rel.G0 * U00 - (g_np1 * Dn1) * rel.G1 + fam.B() * rel.H;
    out.G1 = phi * rel.G1.derivative() + Dn * rel.G0 + U11 * rel.G1;
    out.H = phi * rel.H.derivative() - D0 * rel.G0 + U22 * rel.H;

    out.M.resize(rel.M.size() + 1);
    const Polynomial leak = -D0 * rel.G1 + Dn * rel.H;  // P_{n+1} terms shed by the left side
    out.M[0] = phi * rel.M[0].derivative() - leak;
    for (size_t j = 1; j < out.M.size(); ++j) {
        out.M[j] = phi * rel.M[j - 1];
        if (j < rel.M.size()) out.M[j] += phi * rel.M[j].derivative();
    }
    return out;
}

}  // namespace

FitResult fit_relation(const Family& fam, int n, int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("fit_relation: order must be in 1..4");
    if (n < 0) throw std::invalid_argument("fit_relation: n must be >= 0");
    if (k == 1) return fit_order1(fam, n);
    // Orders 2..4 rise from the verified order-1 relation, which is exact at
    // every n; the direct fit serves as its cross-check where it is unique.
    FitResult res;
    res.relation = relation1_from_R4(fam, n);
    for (int ord = 2; ord <= k; ++ord) res.relation = raise_order(res.relation, fam);
    return res;
}

OdeCoefficients assemble_ode(const std::array<StructureRelation, 4>& rels) {
    for (int k = 0; k < 4; ++k) {
        if (rels[k].order != k + 1)
            throw std::invalid_argument("assemble_ode: relations must have orders 1..4");
        if (rels[k].n != rels[0].n)
            throw std::invalid_argument("assemble_ode: relations must share the index n");
    }

    // Laplace expansion of det [G0_k  G1_k  H_k  RHS_k] along the RHS
    // column; Delta_k is the 3x3 minor with row k removed.
    auto minor3 = [&](int skip) {
        std::array<std::array<Polynomial, 3>, 3> m;
        int r = 0;
        for (int k = 0; k < 4; ++k) {
            if (k == skip) continue;
            m[r][0] = rels[k].G0;
            m[r][1] = rels[k].G1;
            m[r][2] = rels[k].H;
            ++r;
        }
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };

    std::array<Polynomial, 4> delta;
    bool any = false;
    for (int k = 0; k < 4; ++k) {
        delta[k] = minor3(k);
        any = any || !delta[k].is_zero();
    }
    if (!any)
        throw DegenerateRelationsError("assemble_ode: all elimination minors vanish");

    std::array<Polynomial, 5> K;  // K[j] multiplies P^(j)_{n+1}
    for (int k = 0; k < 4; ++k) {
        const Rational sign((k + 1) % 2 == 0 ? 1 : -1);  // (-1)^{row+column}, rows/cols 1-based
        for (size_t j = 0; j < rels[k].M.size(); ++j) {
            K[j] += sign * rels[k].M[j] * delta[k];
        }
    }

    bool all_zero = true;
    for (const auto& p : K) all_zero = all_zero && p.is_zero();
    if (all_zero)
        throw DegenerateRelationsError("assemble_ode: determinant expansion collapsed to zero");

    OdeCoefficients ode;
    ode.E = K[0];
    ode.D = K[1];
    ode.C = K[2];
    ode.B = K[3];
    ode.A = K[4];

    Polynomial g;
    bool have = false;
    for (const auto& p : K) {
        if (p.is_zero()) continue;
        g = have ? Polynomial::gcd(g, p) : p.monic();
        have = true;
    }
    ode.c = g;
    ode.hat = {K[4].divexact(g), K[3].divexact(g), K[2].divexact(g), K[1].divexact(g),
               K[0].divexact(g)};
    return ode;
}

Polynomial ode_residual(const OdeCoefficients& ode, const Family& fam, int n) {
    const PolySeq P = generate(fam, n + 1);
    Polynomial d0 = P[n + 1];
    Polynomial d1 = d0.derivative();
    Polynomial d2 = d1.derivative();
    Polynomial d3 = d2.derivative();
    Polynomial d4 = d3.derivative();
    return ode.hat[0] * d4 + ode.hat[1] * d3 + ode.hat[2] * d2 + ode.hat[3] * d1 + ode.hat[4] * d0;
}

std::optional<Rational> proportionality(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Rational(1);
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.degree() != b.degree()) return std::nullopt;
    const Rational s = b.leading() / a.leading();
    if (b == s * a) return s;
    return std::nullopt;
}

}  // namespace lhkit
