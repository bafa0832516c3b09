#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhkit/structure.hpp"
#include "test_params.hpp"

using namespace lhkit;
using lhkit_test::q;

TEST_CASE("R4 residual is the zero polynomial, all families, n = 0..20") {
    for (const auto& fam : lhkit_test::all_test_families())
        for (int n = 0; n <= 20; ++n) CHECK(verify_R4(fam, n).is_zero());
}

TEST_CASE("R4 detects a wrong D_1") {
    // hermite2 with D_1 = -1 instead of -2: inject via the perturbation hook.
    const Family h2 = lhkit_test::hermite2_reference().perturbed(PerturbTarget::D, 1);
    CHECK(h2.D(1) == Polynomial(q("-1")));
    CHECK(!verify_R4(h2, 0).is_zero());
}

TEST_CASE("CD recurrence: triple agreement with closed forms and tables, n = 0..20") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        const auto cd = run_CD_recurrence(fam, 20);
        for (const auto& pair : cd) {
            CHECK(pair.C == C_closed(fam, pair.n));
            CHECK(pair.C == fam.C(pair.n));
            CHECK(pair.D == D_closed(fam, pair.n));
            CHECK(pair.D == fam.D(pair.n));
            CHECK(pair.C.degree() <= 1);
            CHECK(pair.D.degree() <= 0);
        }
    }
}

TEST_CASE("closed-form spot values") {
    const Family b2 = lhkit_test::bessel2_primary();
    // D_1 = (2n+1)c2 - (a1 + 2 b2) at n = 0: 1 - (-2/5 + 2(2 alpha - 1)) = 13/5
    CHECK(D_closed(b2, 1) == Polynomial(q("13/5")));
    const Family h2 = lhkit_test::hermite2_reference();
    CHECK(D_closed(h2, 0) == Polynomial());  // -(c2+b2+a1) = -(0+2-2)
    CHECK(C_closed(h2, 0) == Polynomial{q("0"), q("2")});
}

TEST_CASE("system report: every equation holds for all families, N = 20") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        const SystemReport rep = verify_system(fam, 20);
        for (const auto& c : rep.checks) {
            INFO(fam.name(), " ", c.name, " n=", c.n, " lhs=", c.lhs, " rhs=", c.rhs);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("r0 case values") {
    const Family b2 = lhkit_test::bessel2_primary();
    CHECK(b2.r0() == 2 * q("1/5") - 3);
    const Family b3 = Family::make(FamilyId::bessel3,
                                   {{"lambda", q("2/7")}, {"rho", q("1")}, {"alpha", q("1/5")}});
    CHECK(b3.r0() == 1 - 2 * q("1/5"));
    // r0 = (phi(beta0) - B(beta0)) / gamma1 agrees
    for (const auto& fam : lhkit_test::all_test_families())
        CHECK((fam.phi()(fam.beta(0)) - fam.B()(fam.beta(0))) / fam.gamma(1) == fam.r0());
}

TEST_CASE("system detects perturbed beta and gamma") {
    const Family bad_beta = lhkit_test::bessel2_primary().perturbed(PerturbTarget::beta, 3);
    CHECK(!verify_system(bad_beta, 6).all_pass);
    const Family bad_gamma = lhkit_test::bessel2_primary().perturbed(PerturbTarget::gamma, 3);
    CHECK(!verify_system(bad_gamma, 6).all_pass);
}

TEST_CASE("class-zero criterion") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        const ClassZeroReport rep = class_zero_criterion(fam);
        CHECK(rep.class_zero);
        const int t = fam.phi().degree();
        if (t == 0) CHECK(rep.roots.empty());  // hermite: vacuous
        if (fam.phi() == Polynomial::x() * Polynomial::x() - Polynomial(1))
            CHECK(rep.roots.size() == 2);
    }
    // laguerre2 (alpha = 1/3): C(0) = -alpha != 0
    const Family l2 = Family::make(FamilyId::laguerre2,
                                   {{"lambda", q("1")}, {"rho", q("1")}, {"alpha", q("1/3")}});
    const auto rep = class_zero_criterion(l2);
    REQUIRE(rep.roots.size() == 1);
    CHECK(rep.roots[0].root == Rational(0));
    CHECK(rep.roots[0].C_at == q("-1/3"));
}

TEST_CASE("window of the general structure relation is [n, n+2]") {
    for (const auto& [id, ps] : lhkit_test::param_sets()) {
        const Family fam = Family::make(id, ps[0]);
        for (int n = 1; n <= 15; ++n) {
            const auto theta = window_structure_check(fam, n);
            for (int mu = 0; mu < static_cast<int>(theta.size()); ++mu) {
                if (mu >= n && mu <= n + 2) continue;
                INFO(fam.name(), " n=", n, " mu=", mu);
                CHECK(theta[mu].is_zero());
            }
        }
    }
    // spot examples: support inside the window
    const Family b2 = lhkit_test::bessel2_primary();
    const auto t3 = window_structure_check(b2, 3);
    CHECK((!t3[3].is_zero() || !t3[4].is_zero() || !t3[5].is_zero()));
    // coefficient at mu = n-1 vanishes
    CHECK(t3[2].is_zero());
}
