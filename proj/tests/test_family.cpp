#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhkit/family.hpp"
#include "test_params.hpp"

using namespace lhkit;
using lhkit_test::q;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Family::make(FamilyId::bessel2, {{"lambda", q("1")}, {"rho", q("1")}}),
                    std::invalid_argument);  // missing alpha
    CHECK_THROWS_AS(
        Family::make(FamilyId::hermite2,
                     {{"lambda", q("1")}, {"rho", q("1")}, {"alpha", q("1")}}),
        std::invalid_argument);  // unknown parameter
    CHECK_THROWS_AS(Family::make(FamilyId::hermite2, {{"lambda", q("1")}, {"rho", q("0")}}),
                    RegularityError);  // rho = 0
}

TEST_CASE("bessel2 regularity: alpha != (n+3)/2") {
    const Family f = Family::make(FamilyId::bessel2,
                                  {{"lambda", q("1")}, {"rho", q("1")}, {"alpha", q("3/2")}});
    try {
        f.validate(5);
        FAIL("expected regularity violation");
    } catch (const RegularityError& e) {
        CHECK(e.index() == 0);
        CHECK(std::string(e.what()).find("(n+3)/2") != std::string::npos);
    }
    // alpha = 1 passes the printed row but hits a zero table denominator
    const Family g = Family::make(FamilyId::bessel2,
                                  {{"lambda", q("1")}, {"rho", q("1")}, {"alpha", q("1")}});
    CHECK_THROWS_AS(g.validate(5), RegularityError);
}

TEST_CASE("bessel2 functional equation row at alpha=1/5, lambda=2/7, rho=1") {
    const Family f = lhkit_test::bessel2_primary();
    CHECK(f.phi() == Polynomial::x() * Polynomial::x());
    CHECK(f.psi() == Polynomial{q("-2"), q("-2/5")});
    // B = (2a-1)x^2 + (2(1-a)l + 2)x - 2l - r(2a-3); the x coefficient is
    // 16/35 + 2 = 86/35 (it must satisfy psi(beta0) + B'(beta0) = 0).
    CHECK(f.B() == Polynomial{q("71/35"), q("86/35"), q("-3/5")});
    CHECK(f.psi()(f.beta(0)) + f.B().derivative()(f.beta(0)) == Rational(0));
}

TEST_CASE("table recurrence rows") {
    // hermite2: beta_{n+1} = 0, gamma_{n+1} = n/2
    const Family h2 = lhkit_test::hermite2_reference();
    for (int n = 1; n <= 10; ++n) CHECK(h2.beta(n) == Rational(0));
    CHECK(h2.gamma(1) == q("1/4"));
    for (int n = 2; n <= 10; ++n) CHECK(h2.gamma(n) == Rational(n - 1, 2));

    // laguerre2: beta_{n+1} = 2n + alpha + 1
    const Family l2 =
        Family::make(FamilyId::laguerre2, {{"lambda", q("1")}, {"rho", q("1")}, {"alpha", q("1/3")}});
    for (int n = 0; n <= 8; ++n) CHECK(l2.beta(n + 1) == 2 * Rational(n) + q("1/3") + 1);

    // bessel2 gamma_2: evaluate the table fraction independently
    const Family b2 = lhkit_test::bessel2_primary();
    const Rational a = q("1/5");
    const Rational expect = -(Rational(1) * (1 + 2 - 2 * a)) /
                            ((2 + 1 - 2 * a) * (1 + 1 - a) * (1 + 1 - a) * (2 + 3 - 2 * a));
    CHECK(b2.gamma(2) == expect);
    CHECK(b2.gamma(2) == q("-125/1863"));
}

TEST_CASE("structure coefficient rows") {
    const Family b2 = lhkit_test::bessel2_primary();
    CHECK(b2.D(1) == Polynomial(q("13/5")));  // D_1 = 3 - 2 alpha
    CHECK(b2.C(0) == Polynomial{q("2"), q("-8/5")});

    const Family h2 = lhkit_test::hermite2_reference();
    CHECK(h2.C(0) == Polynomial{q("0"), q("2")});
    CHECK(h2.D(0).is_zero());

    const Family j2 = Family::make(
        FamilyId::jacobi2,
        {{"lambda", q("2/7")}, {"rho", q("1")}, {"alpha", q("1/2")}, {"beta", q("1/3")}});
    const Rational a = q("1/2"), b = q("1/3");
    CHECK(j2.C(1) == Polynomial{(a * a - b * b) / (a + b), a + b});
    // degree bounds
    for (const auto& fam : lhkit_test::all_test_families())
        for (int n = 0; n <= 6; ++n) {
            CHECK(fam.C(n).degree() <= 1);
            CHECK(fam.D(n).degree() <= 0);
        }
}

TEST_CASE("class-zero leading-coefficient condition |c2| + |a1| + |b2| > 0") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        CHECK((!fam.c2().is_zero() || !fam.a1().is_zero() || !fam.b2().is_zero()));
        // deg psi = 1, deg B = 2, or deg phi = 2 must hold so the class lands at 0
        CHECK((fam.psi().degree() == 1 || fam.B().degree() == 2 || fam.phi().degree() == 2));
    }
}

TEST_CASE("affine shift") {
    const Family b2 = lhkit_test::bessel2_primary();
    auto [p1, s1, b1] = affine_shift(b2, q("1"), q("0"));
    CHECK(p1 == b2.phi());
    CHECK(s1 == b2.psi());
    CHECK(b1 == b2.B());

    auto [p2, s2, b2s] = affine_shift(b2, q("2"), q("0"));
    CHECK(p2 == b2.phi());  // 2^-2 (2x)^2 = x^2
    (void)s2;
    (void)b2s;

    const Family j2 = Family::make(
        FamilyId::jacobi2,
        {{"lambda", q("2/7")}, {"rho", q("1")}, {"alpha", q("1/2")}, {"beta", q("1/3")}});
    auto [p3, s3, b3] = affine_shift(j2, q("1"), q("1"));
    CHECK(p3 == Polynomial::x() * Polynomial::x() + 2 * Polynomial::x());
    (void)s3;
    (void)b3;

    CHECK_THROWS_AS(affine_shift(b2, q("0"), q("1")), std::invalid_argument);
}

TEST_CASE("identifications: shifted family coefficients match the classical references") {
    auto check_match = [](const RecurrenceCoeffs& fam_shifted, const RecurrenceCoeffs& ref) {
        for (int n = 0; n <= 20; ++n) CHECK(fam_shifted.beta(n) == ref.beta(n));
        for (int n = 1; n <= 20; ++n) CHECK(fam_shifted.gamma(n) == ref.gamma(n));
    };
    for (const auto& [id, ps] : lhkit_test::param_sets()) {
        for (const auto& p : ps) {
            const Family fam = Family::make(id, p);
            const RecurrenceCoeffs shifted = associated(coeffs(fam), 1);
            switch (id) {
                case FamilyId::hermite2:
                    check_match(shifted, classical_hermite());
                    break;
                case FamilyId::laguerre2:
                    check_match(shifted, classical_laguerre(fam.param("alpha")));
                    break;
                case FamilyId::bessel2:
                    check_match(shifted,
                                dilated(classical_bessel(2 - fam.param("alpha")), q("-1")));
                    break;
                case FamilyId::bessel3:
                    check_match(shifted, classical_bessel(fam.param("alpha")));
                    break;
                case FamilyId::jacobi2:
                    check_match(shifted, dilated(classical_jacobi(fam.param("alpha"),
                                                                  fam.param("beta")),
                                                 q("-1")));
                    break;
                default:
                    break;
            }
        }
    }
}

TEST_CASE("perturbed-associated construction reproduces the case-1 families") {
    auto check_match = [](const Family& fam, const RecurrenceCoeffs& built) {
        for (int n = 0; n <= 20; ++n) CHECK(fam.beta(n) == built.beta(n));
        for (int n = 1; n <= 20; ++n) CHECK(fam.gamma(n) == built.gamma(n));
    };
    for (long tau = 0; tau <= 2; ++tau) {
        const Rational t(tau);
        const Rational l = q("2/7"), r = q("5/3");
        {
            const Family fam = Family::make(FamilyId::hermite1,
                                            {{"lambda", l}, {"rho", r}, {"tau", t}});
            check_match(fam, perturbed(associated(classical_hermite(), tau), l, {q("0")}, {r}));
        }
        {
            const Rational a = q("1/4");
            const Family fam = Family::make(
                FamilyId::laguerre1, {{"lambda", l}, {"rho", r}, {"tau", t}, {"alpha", a}});
            check_match(fam,
                        perturbed(associated(classical_laguerre(a), tau), l, {q("0")}, {r}));
        }
        {
            const Rational a = q("1/5");
            const Family fam = Family::make(
                FamilyId::bessel1, {{"lambda", l}, {"rho", r}, {"tau", t}, {"alpha", a}});
            check_match(fam, perturbed(associated(classical_bessel(a), tau), l, {q("0")}, {r}));
        }
        {
            const Rational a = q("1/2"), b = q("1/3");
            const Family fam = Family::make(
                FamilyId::jacobi1,
                {{"lambda", l}, {"rho", r}, {"tau", t}, {"alpha", a}, {"beta", b}});
            check_match(fam,
                        perturbed(associated(classical_jacobi(a, b), tau), l, {q("0")}, {r}));
        }
    }
}

TEST_CASE("perturbation rules") {
    const auto base = classical_hermite();
    // identity perturbation
    const auto ident = perturbed(base, q("0"), {q("0")}, {q("1")});
    for (int n = 0; n <= 10; ++n) CHECK(ident.beta(n) == base.beta(n));
    for (int n = 1; n <= 10; ++n) CHECK(ident.gamma(n) == base.gamma(n));
    // co-recursive: order 0, only beta_0 shifts
    const auto co = perturbed(base, q("3/2"), {}, {});
    CHECK(co.beta(0) == q("3/2"));
    for (int n = 1; n <= 10; ++n) CHECK(co.beta(n) == base.beta(n));
    for (int n = 1; n <= 10; ++n) CHECK(co.gamma(n) == base.gamma(n));
    // the hermite1 table at tau = 2: gamma_1 = rho (tau+1)/2 = 3 rho / 2
    const Rational rho = q("5/7");
    const auto pert = perturbed(associated(base, 2), q("1/3"), {q("0")}, {rho});
    CHECK(pert.gamma(1) == rho * 3 / Rational(2));
    // zero lambda entry is irregular
    CHECK_THROWS_AS(perturbed(base, q("0"), {q("0")}, {q("0")}), RegularityError);
}

TEST_CASE("gamma never zero over validated ranges") {
    for (const auto& fam : lhkit_test::all_test_families()) {
        fam.validate(30);
        for (int n = 1; n <= 30; ++n) CHECK(!fam.gamma(n).is_zero());
    }
}

TEST_CASE("each family's printed regularity row trips at the right index") {
    auto expect_violation = [](FamilyId id, ParamMap p, int n_max, const char* needle) {
        try {
            Family::make(id, p).validate(n_max);
            FAIL("expected regularity violation for ", family_name(id));
        } catch (const RegularityError& e) {
            INFO(family_name(id), ": ", std::string(e.what()));
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_violation(FamilyId::hermite1, {{"lambda", q("0")}, {"rho", q("1")}, {"tau", q("-2")}},
                     5, "tau != -n");
    expect_violation(FamilyId::laguerre1,
                     {{"lambda", q("0")}, {"rho", q("1")}, {"tau", q("1/2")}, {"alpha", q("-7/2")}},
                     5, "alpha + tau");
    expect_violation(FamilyId::laguerre2,
                     {{"lambda", q("0")}, {"rho", q("1")}, {"alpha", q("-3")}}, 5, "alpha != -n");
    expect_violation(FamilyId::bessel1,
                     {{"lambda", q("0")}, {"rho", q("1")}, {"tau", q("1/2")}, {"alpha", q("-1")}},
                     5, "tau + alpha != -n/2");
    expect_violation(FamilyId::bessel3, {{"lambda", q("0")}, {"rho", q("1")}, {"alpha", q("-1/2")}},
                     5, "(1-n)/2");
    expect_violation(FamilyId::bessel4, {{"lambda", q("0")}, {"rho", q("1")}, {"alpha", q("1")}},
                     5, "(1-n)/2");
    expect_violation(FamilyId::jacobi1,
                     {{"lambda", q("0")}, {"rho", q("1")}, {"tau", q("-3")}, {"alpha", q("1/2")},
                      {"beta", q("1/3")}},
                     5, "tau != -n-1");
    expect_violation(FamilyId::jacobi2,
                     {{"lambda", q("0")}, {"rho", q("1")}, {"alpha", q("1/2")}, {"beta", q("-5/2")}},
                     5, "alpha + beta");
    // alpha + beta = 0 slips past the printed row but zeroes the beta_1
    // denominator; the dynamic check reports it
    expect_violation(FamilyId::jacobi2,
                     {{"lambda", q("0")}, {"rho", q("1")}, {"alpha", q("5/2")}, {"beta", q("-5/2")}},
                     5, "denominator vanishes");
}

TEST_CASE("generation refuses a vanishing gamma mid-range") {
    // laguerre2 with alpha = -5: gamma_6 = 5 (5 + alpha) = 0
    const Family f = Family::make(FamilyId::laguerre2,
                                  {{"lambda", q("0")}, {"rho", q("1")}, {"alpha", q("-5")}});
    CHECK_THROWS_AS(f.gamma(6), RegularityError);
    CHECK_THROWS_AS(f.validate(10), RegularityError);
}

TEST_CASE("catalogue export carries all ten captions") {
    int new_cases = 0;
    for (FamilyId id : all_families()) {
        const TableRows t = table_rows(id);
        CHECK(!t.caption.empty());
        CHECK(t.caption.find("analogous to") != std::string::npos);
        if (t.caption.find("(new case)") != std::string::npos) ++new_cases;
    }
    CHECK(new_cases == 2);  // the second and third Bessel-like families
}

TEST_CASE("table rows export with substitution") {
    const TableRows plain = table_rows(FamilyId::bessel2);
    CHECK(plain.caption == "Case 2 analogous to Bessel (new case)");
    CHECK(plain.regularity.find("alpha != (n+3)/2") != std::string::npos);
    const TableRows sub = table_rows(FamilyId::bessel2, {{"alpha", q("1/5")}});
    CHECK(sub.recurrence[1].find("(1/5)") != std::string::npos);
    // "beta_0" must survive substitution of the parameter named "beta"
    const TableRows j = table_rows(FamilyId::jacobi2, {{"beta", q("1/3")}});
    CHECK(j.recurrence[0].find("beta_0 = lambda") != std::string::npos);
    CHECK(j.functional_equation[1].find("(1/3)") != std::string::npos);
}
