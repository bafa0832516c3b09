#include "lhkit/bessel2_reference.hpp"

#include <stdexcept>

namespace lhkit {

namespace {

using Q = Rational;

// Shared shorthands for the bessel2 coefficient blocks, all at fixed n:
//   A1 = -alpha + n + 1,  A2 = -2 alpha + n + 2,  A3 = -2 alpha + 2 n + 1.
struct Ctx {
    Q a, l, r;  // alpha, lambda, rho
    int ni = 0;
    Q n, A1, A2, A3;
    Q a2, a3, a4, a5;  // powers of alpha
    Q n2, n3, n4;      // powers of n
    Q u;               // 2 alpha rho + 2 lambda - 3 rho

    Ctx(const Q& alpha, const Q& lambda, const Q& rho, int nn)
        : a(alpha), l(lambda), r(rho), ni(nn), n(nn) {
        A1 = n + 1 - a;
        A2 = n + 2 - 2 * a;
        A3 = 2 * n + 1 - 2 * a;
        a2 = a * a;
        a3 = a2 * a;
        a4 = a3 * a;
        a5 = a4 * a;
        n2 = n * n;
        n3 = n2 * n;
        n4 = n3 * n;
        u = 2 * a * r + 2 * l - 3 * r;
        if (A1.is_zero() || A3.is_zero())
            throw RegularityError("alpha != (n+3)/2, n >= 0", nn);
    }
};

Polynomial mono(int k, const Q& c) { return Polynomial::monomial(k, c); }

// B(x) of the family, which several blocks reuse verbatim.
Polynomial famB(const Ctx& c) {
    return Polynomial{-2 * c.l - c.r * (2 * c.a - 3), 2 * (1 - c.a) * c.l + 2, 2 * c.a - 1};
}

StructureRelation relation_k1(const Ctx& c) {
    StructureRelation rel;
    rel.order = 1;
    rel.n = c.ni;
    rel.G0 = Polynomial();
    rel.G1 = famB(c);
    if (c.ni == 0)
        rel.H = Polynomial((2 * c.a - 3) * c.r);
    else
        rel.H = Polynomial(c.n * c.A2 / (c.A3 * c.A1 * c.A1));
    rel.M.resize(2);
    rel.M[0] = mono(1, 2 * c.a - c.n - 2) + Polynomial((2 * c.a - c.n - 2) / (c.a - c.n - 1));
    rel.M[1] = mono(2, Q(1));
    return rel;
}

StructureRelation relation_k2(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    StructureRelation rel;
    rel.order = 2;
    rel.n = c.ni;

    if (c.ni == 0) {
        rel.G0 = (2 * (2 * a - 3) * r) *
                 (mono(2, 2 * a - 1) + mono(1, 2 - 2 * (a - 1) * l) +
                  Polynomial((3 - 2 * a) * r - 2 * l));
    } else {
        rel.G0 = (2 * n * c.A2 / (c.A3 * c.A1 * c.A1)) *
                 (mono(2, 2 * a - 1) + mono(1, 2 * (1 - (a - 1) * l)) +
                  Polynomial((3 - 2 * a) * r - 2 * l));
    }

    rel.G1 = (1 / c.A1) *
             (mono(3, (2 * a - 1) * (-2 * (a - 1) + c.n2 - (a - 3) * n)) +
              mono(2, 2 * (a - 1) * (a - 1) * l - 2 * (a - 1) + c.n2 * (2 - 2 * (a - 1) * l) +
                          n * (2 * (a - 2) * (a - 1) * l + 3)) +
              mono(1, c.n2 * ((3 - 2 * a) * r - 2 * l) + n * ((a - 1) * (2 * a - 3) * r + 2)) +
              Polynomial(n * ((3 - 2 * a) * r - 2 * l)));

    rel.H = (-c.n2 * c.A2 / (c.A3 * c.A1 * c.A1 * c.A1)) * (mono(1, c.A1) + Polynomial(Q(1)));

    rel.M.resize(3);
    rel.M[0] = (-c.A2 / (c.A1 * c.A1)) * (mono(2, c.A1 * c.A1) + Polynomial(n));
    rel.M[1] = mono(3, 2 * a - n) + mono(2, c.A2 / c.A1);
    rel.M[2] = mono(4, Q(1));
    return rel;
}

StructureRelation relation_k3(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    const Q &A1 = c.A1, &A2 = c.A2, &A3 = c.A3;
    StructureRelation rel;
    rel.order = 3;
    rel.n = c.ni;

    if (c.ni == 0) {
        rel.G0 = (2 * (2 * a - 3) * r) *
                 (mono(3, 4 * c.a2 - 1) + mono(2, (-4 * c.a2 + 5 * a - 1) * l + 8 * a - 3) +
                  mono(1, (-4 * c.a2 + 10 * a - 6) * r + (8 - 8 * a) * l + 4) +
                  Polynomial((6 - 4 * a) * r - 4 * l));
    } else {
        rel.G0 =
            (A2 / (A3 * A1 * A1)) *
            (mono(3, -2 * (2 * a - 1) * n * (-2 * a + n - 1)) +
             (2 * n / A1) * mono(2, c.n2 * ((2 * a - 2) * l - 2) +
                                        n * ((-6 * c.a2 + 9 * a - 3) * l + 8 * a - 4) +
                                        (4 * c.a3 - 9 * c.a2 + 6 * a - 1) * l - 8 * c.a2 +
                                        11 * a - 3) +
             (2 * n * A2 / A1) * mono(1, (-2 * c.a2 + 5 * a - 3) * r + (4 - 4 * a) * l +
                                             n * ((2 * a - 3) * r + 2 * l) + 2) -
             Polynomial(2 * n * A2 * (2 * a * r + 2 * l - 3 * r) / A1));
    }

    rel.G1 =
        mono(4, (2 * a - 1) * (n + 2) * (n + 3)) -
        (1 / A1) * mono(3, 2 * (n + 2) *
                               ((-c.a2 + 2 * a - 1) * l + a + c.n2 * ((a - 1) * l - 1) +
                                n * ((-c.a2 + 3 * a - 2) * l - a - 1) - 1)) -
        (1 / (A1 * A1)) *
            mono(2, n * (c.n3 * ((2 * a - 3) * r + 2 * l) +
                         c.n2 * ((-4 * c.a2 + 12 * a - 9) * r + 2 * l - 4) +
                         n * ((-2 * c.a2 + 4 * a - 2) * l +
                              (2 * c.a3 - 11 * c.a2 + 18 * a - 9) * r - 2 * a - 5) +
                         (-2 * c.a2 + 4 * a - 2) * l + 8 * c.a2 +
                         (2 * c.a3 - 7 * c.a2 + 8 * a - 3) * r - 8 * a)) +
        (1 / (A1 * A1)) *
            mono(1, 2 * n * ((4 * c.a2 - 8 * a + 4) * l - 4 * a + c.n2 * ((3 - 2 * a) * r - 2 * l) +
                             n * ((2 * c.a2 - 5 * a + 3) * r + (1 - a) * l + 3) + 4)) -
        Polynomial(n * (-4 * a + 3 * n + 4) * (2 * a * r + 2 * l - 3 * r) / (A1 * A1));

    rel.H = (c.n2 * A2 / (A3 * A1 * A1)) *
            (mono(2, n - 1) + mono(1, 2 * n / A1) + Polynomial(n / (A1 * A1)));

    rel.M.resize(4);
    rel.M[0] = A2 * (mono(3, Q(-2)) + mono(1, c.n2 / (A1 * A1)) +
                     Polynomial(c.n2 / (A1 * A1 * A1)));
    rel.M[1] = mono(4, -2 * (-4 * a + 2 * n + 1)) + mono(3, 2 * A2 / A1) +
               mono(2, -n * A2 / (A1 * A1));
    rel.M[2] = mono(5, 2 * a - n + 4) + mono(4, A2 / A1);
    rel.M[3] = mono(6, Q(1));
    return rel;
}

StructureRelation relation_k4(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    const Q &A1 = c.A1, &A2 = c.A2, &A3 = c.A3;
    const Q& u = c.u;
    StructureRelation rel;
    rel.order = 4;
    rel.n = c.ni;

    if (c.ni == 0) {
        rel.G0 = (4 * (2 * a - 3) * r) *
                 (mono(4, 2 * (2 * a - 1) * (c.a2 + a + 1)) +
                  mono(3, 12 * c.a2 + (-4 * c.a3 + 5 * c.a2 - 2 * a + 1) * l - 3 * a) +
                  mono(2, (-12 * c.a2 + 17 * a - 5) * l +
                              (-4 * c.a3 + 12 * c.a2 - 11 * a + 3) * r + 12 * a - 5) -
                  mono(1, 4 * ((2 * c.a2 - 5 * a + 3) * r + (3 * a - 3) * l - 1)) -
                  Polynomial(2 * u));
    } else {
        rel.G0 =
            (1 / (A3 * A1 * A1)) *
            (mono(4, 4 * (2 * a - 1) * n * A2 * (2 * c.a2 + 2 * a + c.n2 - 2 * a * n + 2)) -
             (2 * n * A2 / A1) *
                 mono(3, 4 * c.n3 * (a * l - l - 1) - (12 * a - 7) * c.n2 * (a * l - l - 1) +
                             n * (16 * c.a3 * l - 29 * c.a2 * l - 32 * c.a2 + 18 * a * l +
                                  23 * a - 5 * l - 6) -
                             2 * (a - 1) *
                                 (4 * c.a3 * l - 5 * c.a2 * l - 12 * c.a2 + 2 * a * l + 3 * a -
                                  l)) -
             (2 * n * A2 / (A1 * A1)) *
                 mono(2, 2 * c.n4 * u - (8 * a - 7) * c.n3 * u +
                             c.n2 * (28 * c.a3 * r + 44 * c.a2 * l - 90 * c.a2 * r -
                                     73 * a * l + 92 * a * r - 22 * a + 29 * l - 30 * r + 12) -
                             (a - 1) * n *
                                 (24 * c.a3 * r + 56 * c.a2 * l - 74 * c.a2 * r - 85 * a * l +
                                  71 * a * r - 44 * a + 29 * l - 21 * r + 21) +
                             2 * (a - 1) * (a - 1) *
                                 (4 * c.a3 * r + 12 * c.a2 * l - 12 * c.a2 * r - 17 * a * l +
                                  11 * a * r - 12 * a + 5 * l - 3 * r + 5)) -
             (4 * n * A2 / (A1 * A1)) *
                 mono(1, c.n2 * ((8 * c.a2 - 20 * a + 12) * r + (11 * a - 11) * l - 3) +
                             n * ((-22 * c.a2 + 44 * a - 22) * l +
                                  (-16 * c.a3 + 56 * c.a2 - 64 * a + 24) * r + 6 * a - 6) -
                             4 * c.a2 + (12 * c.a3 - 36 * c.a2 + 36 * a - 12) * l +
                             (8 * c.a4 - 36 * c.a3 + 60 * c.a2 - 44 * a + 12) * r + 8 * a - 4) -
             Polynomial(2 * n * A2 *
                        (4 * (a - 1) * (a - 1) + 3 * c.n2 - 6 * (a - 1) * n) * u /
                        (A1 * A1)));
    }

    // The n^4..n^1 group below rides with the x^3 term; the x^4 bracket keeps
    // only the (alpha lambda - lambda - 1) tail.
    const Q QG = c.n4 * u +
                 c.n3 * (-4 * c.a2 * r + 2 * a * l + 16 * a * r + 4 * l - 15 * r - 6) +
                 c.n2 * (2 * c.a3 * r - 4 * c.a2 * l - 19 * c.a2 * r + 14 * a * l + 42 * a * r -
                         6 * l - 27 * r - 21) +
                 n * (6 * c.a3 * r - 12 * c.a2 * l - 29 * c.a2 * r - 8 * c.a2 + 28 * a * l +
                      44 * a * r - 2 * a - 16 * l - 21 * r - 18);
    rel.G1 =
        mono(5, (2 * a - 1) * (n + 2) * (n + 3) * (n + 4)) -
        (1 / A1) *
            mono(4, (n + 2) * (n + 3) *
                        (-2 * (a - 1) * (a * l - l - 1) + 2 * c.n2 * (a * l - l - 1) +
                         n * (-2 * c.a2 * l + 6 * a * l - 4 * a - 4 * l - 1))) -
        (1 / (A1 * A1)) *
            mono(3, n * (QG + 2 * (a - 1) *
                                  (2 * c.a2 * r + 8 * c.a2 - 4 * a * l - 5 * a * r + 8 * a +
                                   4 * l + 3 * r))) -
        (1 / (A1 * A1 * A1)) *
            mono(2, n * (3 * c.n4 * u -
                         3 * c.n3 * (4 * c.a2 * r + 2 * a * l - 12 * a * r - 4 * l + 9 * r + 2) +
                         c.n2 * (6 * c.a3 * r + 8 * c.a2 * l - 33 * c.a2 * r - 12 * a * l +
                                 54 * a * r - 12 * a + 4 * l - 27 * r - 9) -
                         3 * n * (a - 1) *
                             (8 * c.a2 * l - 2 * c.a2 * r - 6 * a * l + 5 * a * r - 16 * a -
                              2 * l - 3 * r) +
                         4 * (a - 1) * (a - 1) *
                             (4 * c.a2 * l - 3 * a * l - 8 * a - l + 1))) -
        (1 / (A1 * A1 * A1)) *
            mono(1, n * (3 * c.n3 * u +
                         c.n2 * (2 * c.a2 * r + 12 * a * l - 5 * a * r - 12 * l + 3 * r - 10) -
                         12 * (a - 1) * n *
                             (2 * c.a2 * r + 4 * a * l - 5 * a * r - 4 * l + 3 * r - 2) +
                         8 * (a - 1) * (a - 1) *
                             (2 * c.a2 * r + 4 * a * l - 5 * a * r - 4 * l + 3 * r - 2))) -
        Polynomial(n * (8 * c.a2 - 16 * a + 5 * c.n2 - 12 * a * n + 12 * n + 8) * u /
                   (A1 * A1 * A1));

    rel.H = (1 / (A3 * A1 * A1)) *
            (mono(3, -(n - 2) * (n - 1) * c.n2 * A2) - mono(2, 3 * (n - 1) * c.n3 * A2 / A1) -
             mono(1, 3 * c.n4 * A2 / (A1 * A1)) - Polynomial(c.n4 * A2 / (A1 * A1 * A1)));

    rel.M.resize(5);
    rel.M[0] = mono(4, -6 * A2) -
               (A2 / (A1 * A1)) * (mono(2, (n - 2) * c.n2) + mono(1, 2 * c.n3 / A1) +
                                   Polynomial(c.n3 / (A1 * A1)));
    rel.M[1] = mono(5, -6 * (-6 * a + 3 * n + 2)) +
               (A2 / A1) * (mono(4, Q(6)) + mono(3, (n - 2) * n / A1) +
                            mono(2, c.n2 / (A1 * A1)));
    rel.M[2] = mono(6, -9 * (-2 * a + n - 2)) + (A2 / A1) * (mono(5, Q(6)) + mono(4, -n / A1));
    rel.M[3] = mono(7, 2 * a - n + 10) + mono(6, A2 / A1);
    rel.M[4] = mono(8, Q(1));
    return rel;
}

// --- reduced fourth-order equation -----------------------------------------

// Shared n-dependent brackets of the hat coefficients.
Q bracket_W1(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &n = c.n;
    return (3 * c.a2 - 7 * a + 4) * l - 5 * a + c.n2 * ((2 - 2 * a) * l + 2) +
           n * ((4 * c.a2 - 10 * a + 6) * l - 4 * a + 6) + 5;
}

Q bracket_W2(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    return (28 * c.a2 - 60 * a + 26) * l + (-4 * c.a3 + 13 * c.a2 - 14 * a + 5) * l * l +
           (8 * c.a3 - 36 * c.a2 + 46 * a - 15) * r - 16 * a +
           c.n2 * ((4 * c.a2 - 8 * a + 4) * l * l + (-8 * c.a2 + 16 * a - 6) * r +
                   (12 - 16 * a) * l + 4) +
           n * ((32 * c.a2 - 72 * a + 36) * l + (-8 * c.a3 + 28 * c.a2 - 32 * a + 12) * l * l +
                (16 * c.a3 - 56 * c.a2 + 60 * a - 18) * r - 8 * a + 12) +
           11;
}

Q bracket_W3(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    return (-4 * c.a2 + 10 * a - 6) * l * l + (6 * c.a2 - 15 * a + 9) * r +
           l * ((-2 * c.a3 + 9 * c.a2 - 13 * a + 6) * r + 10 * a - 10) +
           c.n2 * (l * ((4 * c.a2 - 10 * a + 6) * r - 4) + (4 * a - 4) * l * l +
                   (6 - 4 * a) * r) +
           n * ((-8 * c.a2 + 20 * a - 12) * l * l + (8 * c.a2 - 24 * a + 18) * r +
                l * ((-8 * c.a3 + 32 * c.a2 - 42 * a + 18) * r + 8 * a - 12)) -
           2;
}

Q bracket_W4(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    return (2 * a - 2) * l + c.n2 * ((3 - 2 * a) * r - 2 * l) +
           n * ((4 * c.a2 - 12 * a + 9) * r + (4 * a - 6) * l) - 2;
}

Polynomial hat_A(const Ctx& c) {
    const Q T1 = (2 * c.a - 1) * (2 * c.a - 1) * (c.n + 1) * c.A2;
    return mono(8, T1) + mono(7, 2 * (2 * c.a - 1) * bracket_W1(c)) + mono(6, bracket_W2(c)) +
           mono(5, 2 * bracket_W3(c)) + mono(4, -c.u * bracket_W4(c));
}

Polynomial hat_B(const Ctx& c) {
    const Q T1 = (2 * c.a - 1) * (2 * c.a - 1) * (c.n + 1) * c.A2;
    return mono(7, 6 * T1) + mono(6, 14 * (2 * c.a - 1) * bracket_W1(c)) +
           mono(5, 8 * bracket_W2(c)) + mono(4, 18 * bracket_W3(c)) +
           mono(3, -10 * c.u * bracket_W4(c));
}

Polynomial hat_C(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    const Q l2 = l * l, r2 = r * r;

    const Q V1 = -36 * c.a3 + 96 * c.a2 +
                 l * (12 * c.a4 - 56 * c.a3 + (16 * c.a2 - 40 * a + 24) * r + 71 * c.a2 -
                      13 * a - 30) +
                 (16 * a - 16) * l2 + (24 - 16 * a) * r - 45 * a +
                 c.n4 * ((4 - 4 * a) * l + 4) +
                 c.n3 * ((16 * c.a2 - 40 * a + 24) * l - 16 * a + 24) +
                 c.n2 * ((-16 * c.a2 + 48 * a - 36) * r2 + 32 * c.a2 +
                         l * (-24 * c.a3 + 96 * c.a2 + (48 - 32 * a) * r - 109 * a + 37) -
                         84 * a - 16 * l2 + 41) +
                 n * (-32 * c.a3 + 120 * c.a2 + (32 * c.a3 - 144 * c.a2 + 216 * a - 108) * r2 +
                      l * (16 * c.a4 - 88 * c.a3 + (64 * c.a2 - 192 * a + 144) * r +
                           146 * c.a2 - 77 * a + 3) +
                      (32 * a - 48) * l2 - 118 * a + 15) -
                 15;

    const Q V2 =
        -128 * c.a3 + 298 * c.a2 + (104 * c.a4 - 432 * c.a3 + 488 * c.a2 - 63 * a - 61) * l +
        (-8 * c.a5 + 46 * c.a4 - 77 * c.a3 + 28 * c.a2 + 31 * a - 20) * l2 +
        (16 * c.a5 - 120 * c.a4 + 292 * c.a3 - 234 * c.a2 - 2 * a + 30) * r - 127 * a +
        c.n4 * ((4 * c.a2 - 8 * a + 4) * l2 + (-8 * c.a2 + 16 * a - 6) * r + (12 - 16 * a) * l +
                4) +
        c.n3 * ((64 * c.a2 - 144 * a + 72) * l + (-16 * c.a3 + 56 * c.a2 - 64 * a + 24) * l2 +
                (32 * c.a3 - 112 * c.a2 + 120 * a - 36) * r - 16 * a + 24) +
        c.n2 * (64 * c.a2 + (-128 * c.a3 + 440 * c.a2 - 410 * a + 106) * l +
                (24 * c.a4 - 120 * c.a3 + 193 * c.a2 - 122 * a + 25) * l2 +
                (-48 * c.a4 + 240 * c.a3 - 404 * c.a2 + 268 * a - 60) * r - 128 * a + 43) +
        n * (-96 * c.a3 + 304 * c.a2 +
             (128 * c.a4 - 592 * c.a3 + 844 * c.a2 - 362 * a - 6) * l +
             (-16 * c.a5 + 104 * c.a4 - 210 * c.a3 + 139 * c.a2 + 16 * a - 33) * l2 +
             (32 * c.a5 - 208 * c.a4 + 472 * c.a3 - 452 * c.a2 + 168 * a - 18) * r - 254 * a +
             21) -
        13;

    const Q V3 =
        -112 * c.a2 + (-32 * c.a4 + 148 * c.a3 - 186 * c.a2 + 20 * a + 50) * l2 +
        (56 * c.a4 - 308 * c.a3 + 484 * c.a2 - 202 * a - 30) * r +
        l * (176 * c.a3 - 548 * c.a2 +
             (-8 * c.a5 + 60 * c.a4 - 140 * c.a3 + 90 * c.a2 + 58 * a - 60) * r + 364 * a + 8) +
        168 * a +
        c.n4 * (l * ((8 * c.a2 - 20 * a + 12) * r - 8) + (8 * a - 8) * l2 + (12 - 8 * a) * r) +
        c.n3 * ((-32 * c.a2 + 80 * a - 48) * l2 + (32 * c.a2 - 96 * a + 72) * r +
                l * ((-32 * c.a3 + 128 * c.a2 - 168 * a + 72) * r + 32 * a - 48)) +
        c.n2 * ((64 * c.a3 - 240 * c.a2 + 230 * a - 54) * l2 +
                (-80 * c.a3 + 312 * c.a2 - 342 * a + 81) * r +
                l * (-128 * c.a2 + (48 * c.a4 - 264 * c.a3 + 470 * c.a2 - 311 * a + 57) * r +
                     280 * a - 94) +
                32 * a - 24) +
        n * (-64 * c.a2 + (-64 * c.a4 + 320 * c.a3 - 460 * c.a2 + 150 * a + 54) * l2 +
             (96 * c.a4 - 480 * c.a3 + 756 * c.a2 - 324 * a - 81) * r +
             l * (192 * c.a3 - 656 * c.a2 +
                  (-32 * c.a5 + 224 * c.a4 - 484 * c.a3 + 304 * c.a2 + 141 * a - 153) * r +
                  596 * a - 66) +
             144 * a - 72) -
        26;

    const Q V4 =
        (-48 * c.a3 + 166 * c.a2 - 140 * a + 22) * l2 +
        (72 * c.a3 - 276 * c.a2 + 288 * a - 54) * r +
        l * (144 * c.a2 + (-24 * c.a4 + 132 * c.a3 - 216 * c.a2 + 108 * a) * r - 296 * a + 92) -
        48 * a +
        c.n4 * ((4 * c.a2 - 12 * a + 9) * r2 + (8 * a - 12) * l * r + 4 * l2) +
        c.n3 * ((-32 * c.a2 + 96 * a - 72) * l * r + (-16 * c.a3 + 72 * c.a2 - 108 * a + 54) * r2 +
                (24 - 16 * a) * l2) +
        c.n2 * ((64 * c.a2 - 152 * a + 44) * l2 + (-48 * c.a2 + 112 * a - 60) * r +
                l * ((80 * c.a3 - 328 * c.a2 + 352 * a - 60) * r - 64 * a + 56) +
                (24 * c.a4 - 144 * c.a3 + 274 * c.a2 - 174 * a + 9) * r2 + 8) +
        n * ((-96 * c.a3 + 352 * c.a2 - 328 * a + 24) * l2 +
             (96 * c.a3 - 368 * c.a2 + 456 * a - 180) * r +
             l * (128 * c.a2 + (-96 * c.a4 + 512 * c.a3 - 824 * c.a2 + 312 * a + 144) * r -
                  304 * a + 168) +
             (-16 * c.a5 + 120 * c.a4 - 260 * c.a3 + 90 * c.a2 + 270 * a - 216) * r2 - 16 * a +
             24) +
        34;

    const Q V5 = (-8 * c.a2 + 18 * a - 10) * l2 + (10 * c.a2 - 25 * a + 15) * r +
                 l * ((-6 * c.a3 + 23 * c.a2 - 29 * a + 12) * r + 14 * a - 14) +
                 c.n2 * (l * ((12 * c.a2 - 30 * a + 18) * r - 4) +
                         (4 * c.a3 - 16 * c.a2 + 21 * a - 9) * r2 + (8 * a - 8) * l2 +
                         (6 - 4 * a) * r) +
                 n * ((-16 * c.a2 + 40 * a - 24) * l2 + (8 * c.a2 - 24 * a + 18) * r +
                      l * ((-24 * c.a3 + 96 * c.a2 - 126 * a + 54) * r + 8 * a - 12) +
                      (-8 * c.a4 + 44 * c.a3 - 90 * c.a2 + 81 * a - 27) * r2) -
                 2;

    const Q head = (c.n + 1) * c.A2 * (2 * a - 1) * (2 * a - 1) *
                   (c.n2 + n * (-2 * a + 3) + 2 * c.a2 - 4 * a - 1);
    const Q x5_tail =
        -8 * c.u * (2 * a - 1) * (2 * (1 - (a - 1) * l) + c.u * n * (n - 2 * a + 3));
    return mono(6, -2 * head) + mono(5, -2 * (2 * a - 1) * V1 + x5_tail) + mono(4, -2 * V2) +
           mono(3, -2 * V3) + mono(2, -2 * V4) + mono(1, -8 * V5) +
           Polynomial(4 * c.u * bracket_W4(c));
}

Polynomial hat_D(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    const Q l2 = l * l, r2 = r * r;

    const Q U1 =
        -24 * c.a3 + (32 * c.a2 - 48 * a + 16) * l2 + 78 * c.a2 +
        l * (16 * c.a4 - 70 * c.a3 + 116 * c.a2 + (32 * c.a3 - 96 * c.a2 + 88 * a - 24) * r -
             86 * a + 24) -
        84 * a + c.n4 * ((6 - 6 * a) * l + 6) +
        c.n3 * ((24 * c.a2 - 60 * a + 36) * l - 24 * a + 36) +
        c.n2 * (32 * c.a2 +
                l * (-36 * c.a3 + (-80 * c.a2 + 200 * a - 120) * r + 139 * c.a2 - 181 * a + 62) +
                (-48 * c.a3 + 192 * c.a2 - 252 * a + 108) * r2 + (32 - 32 * a) * l2 +
                (24 - 16 * a) * r - 107 * a + 81) +
        n * (-16 * c.a3 + (64 * c.a2 - 160 * a + 96) * l2 + (32 * c.a2 - 96 * a + 72) * r +
             94 * c.a2 +
             l * (24 * c.a4 - 122 * c.a3 + 239 * c.a2 +
                  (160 * c.a3 - 640 * c.a2 + 840 * a - 360) * r - 181 * a + 24) +
             (96 * c.a4 - 528 * c.a3 + 1080 * c.a2 - 972 * a + 324) * r2 - 159 * a + 81) +
        30;

    const Q U2 =
        -24 * c.a3 + 70 * c.a2 + (48 * c.a4 - 208 * c.a3 + 328 * c.a2 - 218 * a + 50) * l +
        (-8 * c.a5 + 46 * c.a4 - 101 * c.a3 + 106 * c.a2 - 53 * a + 10) * l2 +
        (8 * c.a5 - 60 * c.a4 + 170 * c.a3 - 225 * c.a2 + 137 * a - 30) * r - 63 * a +
        c.n4 * ((4 * c.a2 - 8 * a + 4) * l2 + (-8 * c.a2 + 16 * a - 6) * r + (12 - 16 * a) * l +
                4) +
        c.n3 * ((64 * c.a2 - 144 * a + 72) * l + (-16 * c.a3 + 56 * c.a2 - 64 * a + 24) * l2 +
                (32 * c.a3 - 112 * c.a2 + 120 * a - 36) * r - 16 * a + 24) +
        c.n2 * (16 * c.a2 + (-96 * c.a3 + 350 * c.a2 - 427 * a + 157) * l +
                (24 * c.a4 - 120 * c.a3 + 217 * c.a2 - 170 * a + 49) * l2 +
                (-48 * c.a4 + 220 * c.a3 - 392 * c.a2 + 309 * a - 81) * r - 74 * a + 52) +
        n * (52 * c.a2 + (64 * c.a4 - 316 * c.a3 + 608 * c.a2 - 515 * a + 147) * l +
             (-16 * c.a5 + 104 * c.a4 - 258 * c.a3 + 307 * c.a2 - 176 * a + 39) * l2 +
             (32 * c.a5 - 168 * c.a4 + 388 * c.a3 - 498 * c.a2 + 333 * a - 81) * r - 110 * a +
             48) +
        17;

    const Q U3 =
        -16 * c.a2 + (-48 * c.a4 + 236 * c.a3 - 410 * c.a2 + 292 * a - 70) * l2 +
        (32 * c.a4 - 176 * c.a3 + 328 * c.a2 - 244 * a + 60) * r +
        l * (96 * c.a3 - 308 * c.a2 +
             (-16 * c.a5 + 120 * c.a4 - 340 * c.a3 + 450 * c.a2 - 274 * a + 60) * r + 294 * a -
             82) +
        24 * a +
        c.n4 * (l * ((20 * c.a2 - 50 * a + 30) * r - 20) + (20 * a - 20) * l2 +
                (30 - 20 * a) * r) +
        c.n3 * ((-80 * c.a2 + 200 * a - 120) * l2 + (80 * c.a2 - 240 * a + 180) * r +
                l * ((-80 * c.a3 + 320 * c.a2 - 420 * a + 180) * r + 80 * a - 120)) +
        c.n2 * ((128 * c.a3 - 504 * c.a2 + 634 * a - 258) * l2 +
                (-136 * c.a3 + 558 * c.a2 - 769 * a + 357) * r +
                l * (-128 * c.a2 +
                     (120 * c.a4 - 650 * c.a3 + 1295 * c.a2 - 1125 * a + 360) * r + 370 * a -
                     262) -
                16 * a - 6) +
        n * (32 * c.a2 + (-96 * c.a4 + 512 * c.a3 - 980 * c.a2 + 798 * a - 234) * l2 +
             (112 * c.a4 - 564 * c.a3 + 1052 * c.a2 - 861 * a + 261) * r +
             l * (96 * c.a3 - 404 * c.a2 +
                  (-80 * c.a5 + 540 * c.a4 - 1420 * c.a3 + 1815 * c.a2 - 1125 * a + 270) * r +
                  554 * a - 246) -
             36 * a - 18) -
        8;

    const Q U4 =
        (-48 * c.a3 + 168 * c.a2 - 168 * a + 48) * l2 +
        (16 * c.a3 - 48 * c.a2 + 44 * a - 12) * r +
        l * (32 * c.a2 + (-32 * c.a4 + 176 * c.a3 - 328 * c.a2 + 244 * a - 60) * r - 48 * a +
             16) +
        c.n4 * ((12 * c.a2 - 36 * a + 27) * r2 + (24 * a - 36) * l * r + 12 * l2) +
        c.n3 * ((-96 * c.a2 + 288 * a - 216) * l * r +
                (-48 * c.a3 + 216 * c.a2 - 324 * a + 162) * r2 + (72 - 48 * a) * l2) +
        c.n2 * ((96 * c.a2 - 264 * a + 156) * l2 + (-16 * c.a2 + 48 * a - 36) * r +
                l * ((176 * c.a3 - 760 * c.a2 + 1040 * a - 444) * r + 8) +
                (72 * c.a4 - 432 * c.a3 + 942 * c.a2 - 882 * a + 297) * r2 - 8) +
        n * ((-96 * c.a3 + 384 * c.a2 - 456 * a + 144) * l2 +
             (32 * c.a3 - 144 * c.a2 + 216 * a - 108) * r +
             l * ((-160 * c.a4 + 896 * c.a3 - 1768 * c.a2 + 1416 * a - 360) * r - 16 * a + 24) +
             (-48 * c.a5 + 360 * c.a4 - 1020 * c.a3 + 1350 * c.a2 - 810 * a + 162) * r2 +
             16 * a - 24);

    const Q U5 = (4 * c.a2 - 6 * a + 2) * l +
                 c.n2 * ((-6 * c.a2 + 15 * a - 9) * r + (4 - 4 * a) * l - 2) +
                 n * ((8 * c.a2 - 20 * a + 12) * l + (12 * c.a3 - 48 * c.a2 + 63 * a - 27) * r +
                      4 * a - 6);

    const Q head = (c.n + 1) * c.A2 * (2 * a - 1) * (2 * a - 1) *
                   (c.n2 + n * (-2 * a + 3) + 2 * c.a2 - 4 * a + 2);
    const Q x4_tail =
        -8 * c.u * (2 * a - 1) *
        (-2 * (2 * a - 1) * (a - 1) * l +
         n * (n - 2 * a + 3) * (2 + (a - 1) * (4 * l + 3 * (2 * a - 3) * r)));
    return mono(5, -2 * head) + mono(4, -2 * (2 * a - 1) * U1 + x4_tail) + mono(3, -4 * U2) +
           mono(2, -2 * U3) + mono(1, -2 * U4) + Polynomial(4 * c.u * U5);
}

Polynomial hat_E(const Ctx& c) {
    const Q &a = c.a, &l = c.l, &r = c.r, &n = c.n;
    const Q l2 = l * l;
    const Q np1 = n + 1;

    const Q E1 = -12 * c.a2 + (4 * c.a3 - 17 * c.a2 + 23 * a - 10) * l + 27 * a +
                 c.n4 * ((2 * a - 2) * l - 2) +
                 c.n3 * ((-8 * c.a2 + 20 * a - 12) * l + 8 * a - 12) +
                 c.n2 * (-8 * c.a2 + (8 * c.a3 - 37 * c.a2 + 56 * a - 27) * l + 35 * a - 30) +
                 n * (-22 * c.a2 + (10 * c.a3 - 43 * c.a2 + 60 * a - 27) * l + 57 * a - 36) -
                 15;

    const Q E2 =
        48 * c.a2 + (-48 * c.a3 + 188 * c.a2 - 222 * a + 70) * l +
        (-16 * c.a4 + 104 * c.a3 - 236 * c.a2 + 214 * a - 60) * r - 92 * a +
        c.n4 * ((4 * c.a2 - 8 * a + 4) * l2 + (-8 * c.a2 + 16 * a - 6) * r + (12 - 16 * a) * l +
                4) +
        c.n3 * ((64 * c.a2 - 144 * a + 72) * l + (-16 * c.a3 + 56 * c.a2 - 64 * a + 24) * l2 +
                (32 * c.a3 - 112 * c.a2 + 120 * a - 36) * r - 16 * a + 24) +
        c.n2 * (16 * c.a2 + (-64 * c.a3 + 292 * c.a2 - 424 * a + 166) * l +
                (16 * c.a4 - 84 * c.a3 + 161 * c.a2 - 134 * a + 41) * l2 +
                (-32 * c.a4 + 168 * c.a3 - 364 * c.a2 + 342 * a - 99) * r - 88 * a + 59) +
        n * (80 * c.a2 + (-104 * c.a3 + 428 * c.a2 - 524 * a + 174) * l +
             (8 * c.a4 - 38 * c.a3 + 67 * c.a2 - 52 * a + 15) * l2 +
             (-16 * c.a4 + 176 * c.a3 - 480 * c.a2 + 468 * a - 135) * r - 166 * a + 69) +
        34;

    const Q E3 =
        (-24 * c.a2 + 60 * a - 24) * l + (-16 * c.a3 + 72 * c.a2 - 92 * a + 30) * r +
        c.n4 * (l * ((4 * c.a2 - 10 * a + 6) * r - 4) + (4 * a - 4) * l2 + (6 - 4 * a) * r) +
        c.n3 * ((-16 * c.a2 + 40 * a - 24) * l2 + (16 * c.a2 - 48 * a + 36) * r +
                l * ((-16 * c.a3 + 64 * c.a2 - 84 * a + 36) * r + 16 * a - 24) + 8 * a) +
        c.n2 * ((16 * c.a3 - 68 * c.a2 + 96 * a - 44) * l2 +
                (-16 * c.a3 + 82 * c.a2 - 131 * a + 66) * r +
                l * (-16 * c.a2 + (16 * c.a4 - 86 * c.a3 + 177 * c.a2 - 164 * a + 57) * r +
                     70 * a - 56) -
                6) +
        n * ((8 * c.a3 - 36 * c.a2 + 52 * a - 24) * l2 +
             (-20 * c.a3 + 76 * c.a2 - 93 * a + 36) * r +
             l * (-44 * c.a2 + (-4 * c.a4 + 12 * c.a3 - 5 * c.a2 - 12 * a + 9) * r + 106 * a -
                  60) +
             12 * a - 18) -
        4;

    const Q E4 = -8 * a + c.n4 * ((2 * a - 3) * r + 2 * l) +
                 c.n3 * ((-8 * c.a2 + 24 * a - 18) * r + (12 - 8 * a) * l) +
                 c.n2 * ((8 * c.a2 - 26 * a + 16) * l +
                         (8 * c.a3 - 32 * c.a2 + 40 * a - 15) * r + 6) +
                 n * ((4 * c.a2 - 2 * a - 6) * l + (-8 * c.a3 + 40 * c.a2 - 66 * a + 36) * r -
                      12 * a + 18) +
                 4;

    const Q x1_tail = -16 * a * (c.n3 - 1) * np1 * c.A2;
    return mono(4, np1 * np1 * np1 * c.A2 * c.A2 * c.A2 * (2 * a - 1) * (2 * a - 1)) +
           mono(3, -2 * np1 * c.A2 * (2 * a - 1) * E1) + mono(2, np1 * c.A2 * E2) +
           mono(1, 2 * np1 * c.A2 * E3 + x1_tail) + Polynomial(np1 * c.A2 * c.u * E4);
}

}  // namespace

StructureRelation bessel2_relation(const Rational& alpha, const Rational& lambda,
                                   const Rational& rho, int n, int k) {
    if (n < 0) throw std::invalid_argument("bessel2_relation: n must be >= 0");
    const Ctx c(alpha, lambda, rho, n);
    switch (k) {
        case 1: return relation_k1(c);
        case 2: return relation_k2(c);
        case 3: return relation_k3(c);
        case 4: return relation_k4(c);
        default: throw std::invalid_argument("bessel2_relation: order must be in 1..4");
    }
}

std::array<StructureRelation, 4> bessel2_relations(const Rational& alpha, const Rational& lambda,
                                                   const Rational& rho, int n) {
    return {bessel2_relation(alpha, lambda, rho, n, 1), bessel2_relation(alpha, lambda, rho, n, 2),
            bessel2_relation(alpha, lambda, rho, n, 3), bessel2_relation(alpha, lambda, rho, n, 4)};
}

OdeCoefficients bessel2_ode(const Rational& alpha, const Rational& lambda, const Rational& rho,
                            int n) {
    if (n < 0) throw std::invalid_argument("bessel2_ode: n must be >= 0");
    const Ctx c(alpha, lambda, rho, n);
    OdeCoefficients ode;
    if (n == 0) {
        ode.c = mono(6, 4 * (3 - 2 * c.a) * (3 - 2 * c.a) * c.r * c.r);
    } else {
        ode.c = mono(6, 4 * c.n2 * c.A2 * c.A2 / (c.A3 * c.A3 * c.A1 * c.A1 * c.A1 * c.A1));
    }
    ode.hat = {hat_A(c), hat_B(c), hat_C(c), hat_D(c), hat_E(c)};
    ode.A = ode.hat[0] * ode.c;
    ode.B = ode.hat[1] * ode.c;
    ode.C = ode.hat[2] * ode.c;
    ode.D = ode.hat[3] * ode.c;
    ode.E = ode.hat[4] * ode.c;
    return ode;
}

}  // namespace lhkit
