#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhkit/bessel2_reference.hpp"
#include "test_params.hpp"

using namespace lhkit;
using lhkit_test::q;

TEST_CASE("reference relation coefficients at spot values") {
    const Rational a = q("1/5"), l = q("2/7"), r = q("1");
    const Family fam = lhkit_test::bessel2_primary();

    // G_{1,1} = B = (2a-1)x^2 + (2(1-a)l + 2)x - (2a-3)r - 2l
    const StructureRelation r1 = bessel2_relation(a, l, r, 3, 1);
    CHECK(r1.G1 == fam.B());
    CHECK(r1.G0.is_zero());

    // H_1(x;0) = (2a-3)r
    const StructureRelation r1n0 = bessel2_relation(a, l, r, 0, 1);
    CHECK(r1n0.H == Polynomial((2 * a - 3) * r));

    // M_{0,1} = x(2a-n-2) + (2a-n-2)/(a-n-1) at n = 3
    const Rational nn(3);
    CHECK(r1.M[0] ==
          Polynomial{(2 * a - nn - 2) / (a - nn - 1), 2 * a - nn - 2});

    // Phi^k leading blocks
    CHECK(bessel2_relation(a, l, r, 2, 2).M[2] == Polynomial::monomial(4));
    CHECK(bessel2_relation(a, l, r, 2, 3).M[3] == Polynomial::monomial(6));
    CHECK(bessel2_relation(a, l, r, 2, 4).M[4] == Polynomial::monomial(8));

    // H_3 carries the factor n^2 (-2a+n+2) / ((-2a+2n+1)(-a+n+1)^2)
    const StructureRelation r3 = bessel2_relation(a, l, r, 2, 3);
    const Rational n2 = Rational(4);
    const Rational A1 = Rational(2) + 1 - a, A2 = Rational(2) + 2 - 2 * a,
                   A3 = Rational(4) + 1 - 2 * a;
    const Rational scale = n2 * A2 / (A3 * A1 * A1);
    CHECK(r3.H.coeff(2) == scale * Rational(1));  // (n-1) = 1 at n = 2
}

TEST_CASE("all four reference relations verify, n = 0..10, two parameter triples") {
    for (const auto& p : lhkit_test::param_sets()[5].second) {
        const Family fam = Family::make(FamilyId::bessel2, p);
        const Rational a = fam.param("alpha"), l = fam.param("lambda"), r = fam.param("rho");
        for (int n = 0; n <= 10; ++n)
            for (int k = 1; k <= 4; ++k) {
                INFO("n=", n, " k=", k);
                CHECK(verify_relation(bessel2_relation(a, l, r, n, k), fam).is_zero());
            }
    }
}

TEST_CASE("reference fourth-order equation annihilates P_{n+1}, n = 0..10") {
    for (const auto& p : lhkit_test::param_sets()[5].second) {
        const Family fam = Family::make(FamilyId::bessel2, p);
        const Rational a = fam.param("alpha"), l = fam.param("lambda"), r = fam.param("rho");
        for (int n = 0; n <= 10; ++n) {
            INFO("n=", n);
            CHECK(ode_residual(bessel2_ode(a, l, r, n), fam, n).is_zero());
        }
    }
}

TEST_CASE("common factor matches c(x;n) up to one rational scalar") {
    const Family fam = lhkit_test::bessel2_primary();
    const Rational a = fam.param("alpha"), l = fam.param("lambda"), r = fam.param("rho");
    for (int n = 3; n <= 6; ++n) {
        std::array<StructureRelation, 4> rels = {
            fit_relation(fam, n, 1).relation, fit_relation(fam, n, 2).relation,
            fit_relation(fam, n, 3).relation, fit_relation(fam, n, 4).relation};
        const OdeCoefficients mine = assemble_ode(rels);
        const OdeCoefficients ref = bessel2_ode(a, l, r, n);
        const auto s = proportionality(mine.c, ref.c);
        REQUIRE(s.has_value());
        CHECK(!s->is_zero());
        // and c is a scalar multiple of x^6
        CHECK(ref.c.degree() == 6);
        for (int i = 0; i < 6; ++i) CHECK(ref.c.coeff(i).is_zero());
    }
}

TEST_CASE("any perturbed reference coefficient is detected") {
    const Family fam = lhkit_test::bessel2_primary();
    const Rational a = fam.param("alpha"), l = fam.param("lambda"), r = fam.param("rho");
    for (int k = 1; k <= 4; ++k) {
        StructureRelation rel = bessel2_relation(a, l, r, 5, k);
        rel.G1 += Polynomial(1);
        CHECK(!verify_relation(rel, fam).is_zero());
    }
    OdeCoefficients ode = bessel2_ode(a, l, r, 5);
    ode.hat[2] += Polynomial(1);
    CHECK(!ode_residual(ode, fam, 5).is_zero());
}

TEST_CASE("n = 0 branches of the higher-order relations") {
    for (const auto& p : lhkit_test::param_sets()[5].second) {
        const Family fam = Family::make(FamilyId::bessel2, p);
        const Rational a = fam.param("alpha"), l = fam.param("lambda"), r = fam.param("rho");
        for (int k = 2; k <= 4; ++k)
            CHECK(verify_relation(bessel2_relation(a, l, r, 0, k), fam).is_zero());
        // the dedicated n = 0 G0 branch differs from a naive n = 0 evaluation
        // of the general formula only in the G0 slot, which multiplies
        // P^{(1)}_{-1} = 0; both must therefore verify.
        CHECK(!bessel2_relation(a, l, r, 0, 2).G0.is_zero());
    }
}

TEST_CASE("outside the regular range the reference data refuses to evaluate") {
    CHECK_THROWS_AS(bessel2_relation(q("3/2"), q("1"), q("1"), 1, 2), RegularityError);
    CHECK_THROWS_AS(bessel2_relation(q("1/5"), q("1"), q("1"), -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(bessel2_relation(q("1/5"), q("1"), q("1"), 1, 5), std::invalid_argument);
}
