#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lhkit/forms.hpp"
#include "lhkit/mops.hpp"
#include "test_params.hpp"

using namespace lhkit;
using lhkit_test::q;

namespace {

MomentSeq rand_moments(std::mt19937& rng, int len, bool normalized = false) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> m(len);
    for (auto& x : m) x = Rational(num(rng), den(rng));
    if (normalized) m[0] = Rational(1);
    return MomentSeq(std::move(m), normalized);
}

Polynomial rand_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = Rational(num(rng), 1);
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("moments from the recurrence") {
    const Family h2 = lhkit_test::hermite2_reference();  // lambda=0, rho=1/2
    const MomentSeq u = moments_of(h2, 4);
    CHECK(u[0] == Rational(1));
    CHECK(u[1] == Rational(0));  // beta_0 = lambda = 0
    CHECK(u[2] == q("1/4"));     // beta_0^2 + gamma_1
    // (u)_1 = beta_0 and (u)_2 = beta_0^2 + gamma_1 in general
    for (const auto& fam : lhkit_test::all_test_families()) {
        const MomentSeq m = moments_of(fam, 2);
        CHECK(m[0] == Rational(1));
        CHECK(m[1] == fam.beta(0));
        CHECK(m[2] == fam.beta(0) * fam.beta(0) + fam.gamma(1));
    }
    // zero gamma is irregular
    CHECK_THROWS_AS(moments_from_recurrence({q("0"), q("0"), q("0")}, {q("0"), q("1")}, 3),
                    RegularityError);
}

TEST_CASE("moments agree with the orthogonality route") {
    // Independent oracle: <u, P_n> = 0 for n >= 1 determines the moments
    // recursively from the generated polynomials.
    for (const auto& fam : lhkit_test::all_test_families()) {
        const int N = 12;
        const MomentSeq u = moments_of(fam, N);
        const PolySeq P = generate(fam, N);
        std::vector<Rational> m(N + 1);
        m[0] = Rational(1);
        for (int n = 1; n <= N; ++n) {
            Rational acc(0);
            for (int k = 0; k < n; ++k) acc += P[n].coeff(k) * m[k];
            m[n] = -acc;
        }
        for (int n = 0; n <= N; ++n) CHECK(u[n] == m[n]);
    }
}

TEST_CASE("form derivative") {
    std::mt19937 rng(3);
    const MomentSeq u = rand_moments(rng, 6, true);
    const MomentSeq du = form_derivative(u);
    CHECK(du[0] == Rational(0));
    CHECK(du[1] == Rational(-1));  // -1 * (u)_0
    for (int n = 1; n < 6; ++n) CHECK(du[n] == Rational(-n) * u[n - 1]);
    // (u)_2 = 1/4 gives (u')_3 = -3/4
    std::vector<Rational> m = {q("1"), q("0"), q("1/4"), q("0")};
    CHECK(form_derivative(MomentSeq(m))[3] == q("-3/4"));
}

TEST_CASE("polynomial times form") {
    std::mt19937 rng(5);
    const MomentSeq u = rand_moments(rng, 8);
    const MomentSeq id = poly_times_form(Polynomial(1), u);
    for (int n = 0; n < 8; ++n) CHECK(id[n] == u[n]);
    const MomentSeq sh = poly_times_form(Polynomial::x(), u);
    CHECK(sh.size() == 7);
    for (int n = 0; n < 7; ++n) CHECK(sh[n] == u[n + 1]);
    const MomentSeq h = moments_of(lhkit_test::hermite2_reference(), 4);
    CHECK(poly_times_form(Polynomial::monomial(2), h)[0] == q("1/4"));
    CHECK_THROWS_AS(poly_times_form(Polynomial::monomial(9), u), TruncationError);
}

TEST_CASE("cauchy product") {
    const MomentSeq delta(std::vector<Rational>{q("1"), q("0"), q("0")});
    const MomentSeq d2 = cauchy_product(delta, delta);
    CHECK(d2[0] == Rational(1));
    CHECK(d2[1] == Rational(0));
    CHECK(d2[2] == Rational(0));

    const MomentSeq ones(std::vector<Rational>{q("1"), q("1"), q("1")});
    const MomentSeq sq = cauchy_product(ones, ones);
    CHECK(sq[0] == Rational(1));
    CHECK(sq[1] == Rational(2));
    CHECK(sq[2] == Rational(3));

    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        const MomentSeq u = rand_moments(rng, 7), v = rand_moments(rng, 7);
        const MomentSeq uv = cauchy_product(u, v), vu = cauchy_product(v, u);
        for (int n = 0; n < 7; ++n) CHECK(uv[n] == vu[n]);
    }
    const MomentSeq nu = rand_moments(rng, 5, true), nv = rand_moments(rng, 5, true);
    CHECK(cauchy_product(nu, nv)[0] == Rational(1));

    CHECK_THROWS_AS(cauchy_product(delta, rand_moments(rng, 5)), std::invalid_argument);
}

TEST_CASE("divide by x") {
    const MomentSeq w(std::vector<Rational>{q("1"), q("2"), q("3")});
    const MomentSeq d = divide_by_x(w);
    CHECK(d[0] == Rational(0));
    CHECK(d[1] == Rational(1));
    CHECK(d[2] == Rational(2));
    CHECK(d[3] == Rational(3));

    // x (x^{-1} w) = w exactly; x^{-1}(x w) zeroes entry 0
    std::mt19937 rng(9);
    const MomentSeq u = rand_moments(rng, 6);
    const MomentSeq back = poly_times_form(Polynomial::x(), divide_by_x(u));
    for (int n = 0; n < 6; ++n) CHECK(back[n] == u[n]);
    const MomentSeq other = divide_by_x(poly_times_form(Polynomial::x(), u));
    CHECK(other[0] == Rational(0));
    for (int n = 1; n < 6; ++n) CHECK(other[n] == u[n]);
}

TEST_CASE("form action polynomial") {
    std::mt19937 rng(11);
    const MomentSeq u = rand_moments(rng, 6, true);
    CHECK(form_action(u, Polynomial(1)) == Polynomial(u[0]));
    CHECK(form_action(u, Polynomial::x()) == Polynomial::x() + Polynomial(u[1]));
    std::vector<Rational> m = {q("1"), q("0"), q("5/7"), q("0")};
    const MomentSeq v{m};
    CHECK(form_action(v, Polynomial::monomial(2)) ==
          Polynomial::monomial(2) + Polynomial(q("5/7")));
}

TEST_CASE("Leibniz rule for the product f u") {
    std::mt19937 rng(13);
    for (int i = 0; i < 30; ++i) {
        const MomentSeq u = rand_moments(rng, 10);
        Polynomial f = rand_poly(rng, 3);
        if (f.is_zero()) f = Polynomial(1);
        const MomentSeq lhs = form_derivative(poly_times_form(f, u));
        const MomentSeq t2 = poly_times_form(f, form_derivative(u));
        const Polynomial df = f.derivative();
        int len = std::min(lhs.size(), t2.size());
        if (!df.is_zero()) {
            const MomentSeq t1 = poly_times_form(df, u);
            len = std::min(len, t1.size());
            for (int n = 0; n < len; ++n) CHECK(lhs[n] == t1[n] + t2[n]);
        } else {
            for (int n = 0; n < len; ++n) CHECK(lhs[n] == t2[n]);
        }
    }
}

TEST_CASE("functional equation residual vanishes for every family, n = 0..30") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        const auto res = functional_equation_residual(fam, 30);
        for (int n = 0; n <= 30; ++n) CHECK(res[n].is_zero());
    }
}

TEST_CASE("functional equation residual entry 0 is psi(beta0) + B'(beta0)") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        const auto res = functional_equation_residual(fam, 0);
        CHECK(res[0] == fam.psi()(fam.beta(0)) + fam.B().derivative()(fam.beta(0)));
    }
}

TEST_CASE("perturbed B breaks the functional equation by n <= 2") {
    const Family h2 = lhkit_test::hermite2_reference().perturbed(PerturbTarget::B);
    const auto res = functional_equation_residual(h2, 2);
    CHECK((!res[0].is_zero() || !res[1].is_zero() || !res[2].is_zero()));
}

TEST_CASE("riccati residual series vanishes to order 20") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        const auto res = riccati_residual_series(fam, 20);
        for (int j = 0; j <= 20; ++j) CHECK(res[j].is_zero());
    }
}

TEST_CASE("riccati and functional equation fail together under perturbation") {
    for (auto target : {PerturbTarget::phi, PerturbTarget::psi, PerturbTarget::B}) {
        const Family fam = lhkit_test::bessel2_primary().perturbed(target);
        bool fe_bad = false, ric_bad = false;
        for (const auto& v : functional_equation_residual(fam, 12)) fe_bad = fe_bad || !v.is_zero();
        for (const auto& v : riccati_residual_series(fam, 12)) ric_bad = ric_bad || !v.is_zero();
        CHECK(fe_bad);
        CHECK(ric_bad);
    }
}

TEST_CASE("D0 from moments equals -(c2 + b2 + a1) for every family") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        const Polynomial d0 = D0_from_moments(fam);
        CHECK(d0 == Polynomial(-(fam.c2() + fam.b2() + fam.a1())));
    }
}

TEST_CASE("perturbing D shifts the riccati z^0 coefficient by -1") {
    const Family fam = lhkit_test::bessel2_primary();
    const Polynomial C = -fam.phi().derivative() - fam.psi();
    const Polynomial D = D0_from_moments(fam) + Polynomial(1);
    const auto res = riccati_residual_series(fam, 5, C, D);
    CHECK(res[0] == Rational(-1));
    for (int j = 1; j <= 5; ++j) CHECK(res[j].is_zero());
}
