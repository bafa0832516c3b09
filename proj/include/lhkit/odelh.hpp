#ifndef LHKIT_ODELH_HPP
#define LHKIT_ODELH_HPP

#include <array>
#include <optional>
#include <vector>

#include "lhkit/family.hpp"
#include "lhkit/mops.hpp"
#include "lhkit/polynomial.hpp"

namespace lhkit {

/// Order-k structure relation at fixed index n:
///   G0 P^(1)_{n-1} + G1 P^(1)_n + H P_n = sum_{j=0..k} M[j] P^(j)_{n+1},
/// with M[k] = phi^k pinned. G0 = 0 when k = 1; at n = 0 the G0 term
/// multiplies P^(1)_{-1} = 0 and carries no information.
struct StructureRelation {
    int order = 1;  // k
    int n = 0;
    Polynomial G0, G1, H;
    std::vector<Polynomial> M;  // size order+1, M[j] multiplies P^(j)_{n+1}
};

/// First relation read off the main structure relation: G1 = B,
/// H = -gamma_{n+1} D_{n+1}, M[0] = -1/2 (C_{n+1} - C_0), M[1] = phi.
StructureRelation relation1_from_R4(const Family& fam, int n);

/// Residual of a relation against the generated sequences; the zero
/// polynomial on success.
Polynomial verify_relation(const StructureRelation& rel, const Family& fam);

struct FitResult {
    StructureRelation relation;
    int nullspace_dim = 0;                   // affine solution-space dimension
    std::vector<StructureRelation> basis;    // homogeneous directions, if any
};

/// Derives the order-k relation at fixed index n by exact linear algebra.
/// Order 1 is fitted directly: the degree-bounded coefficients are the
/// unique solution of the linear system that matches x-power coefficients
/// (solve_exact), with the solution-space dimension reported and a basis
/// returned when it is positive. Orders 2..4 are built recursively: the
/// order-k identity is differentiated, multiplied by phi, and the derivative
/// terms phi P'_n, phi P^(1)'_{n-1}, phi P^(1)'_n are eliminated through the
/// main structure relation, the recurrence, and the order-2 associated
/// identity gamma_1 P^(2)_m = (x - beta_0) P^(1)_{m+1} - P_{m+2}. A plain
/// degree-bounded fit is underdetermined for k >= 2 at small n (the unknown
/// count exceeds the n+k+2 coefficient equations), so the recursion is the
/// fitting path that pins the relation; every step stays exact.
FitResult fit_relation(const Family& fam, int n, int k);

/// The five coefficients of the fourth-order equation
///   A P''''_{n+1} + B P'''_{n+1} + C P''_{n+1} + D P'_{n+1} + E P_{n+1} = 0
/// together with the extracted common factor c and the reduced coefficients
/// hat[0..4] = (A..E)/c.
struct OdeCoefficients {
    Polynomial A, B, C, D, E;
    Polynomial c;
    std::array<Polynomial, 5> hat;  // hat[0] = A/c, .., hat[4] = E/c
};

/// Eliminates P^(1)_{n-1}, P^(1)_n, P_n from four relations of orders 1..4
/// at the same index: expands the 4x4 determinant with rows
/// [G0_k, G1_k, H_k, RHS_k] along the RHS column, collects by derivative
/// order, then divides out the monic gcd of the five coefficients.
/// Throws DegenerateRelationsError when every elimination minor vanishes.
OdeCoefficients assemble_ode(const std::array<StructureRelation, 4>& rels);

/// A P''''_{n+1} + B P'''_{n+1} + C P''_{n+1} + D P'_{n+1} + E P_{n+1};
/// the zero polynomial on success. Works on the reduced coefficients.
Polynomial ode_residual(const OdeCoefficients& ode, const Family& fam, int n);

/// The scalar s with b = s * a, when the two polynomials are proportional.
std::optional<Rational> proportionality(const Polynomial& a, const Polynomial& b);

}  // namespace lhkit

#endif
