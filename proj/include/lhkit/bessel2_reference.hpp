#ifndef LHKIT_BESSEL2_REFERENCE_HPP
#define LHKIT_BESSEL2_REFERENCE_HPP

#include <array>

#include "lhkit/odelh.hpp"
#include "lhkit/rational.hpp"

namespace lhkit {

/// Reference coefficient data for the second Bessel-analogous family
/// (bessel2): the four structure relations of orders 1..4 and the reduced
/// fourth-order equation, as explicit functions of (alpha, lambda, rho; n).
/// These are the values the derivation engine is checked against.

/// The order-k relation at index n, k = 1..4. n = 0 uses the dedicated G0
/// branches.
StructureRelation bessel2_relation(const Rational& alpha, const Rational& lambda,
                                   const Rational& rho, int n, int k);

std::array<StructureRelation, 4> bessel2_relations(const Rational& alpha, const Rational& lambda,
                                                   const Rational& rho, int n);

/// Reduced ODE coefficients hat[0..4] = (A..E)/c and the common factor c.
OdeCoefficients bessel2_ode(const Rational& alpha, const Rational& lambda, const Rational& rho,
                            int n);

}  // namespace lhkit

#endif
