#ifndef LHKIT_MOPS_HPP
#define LHKIT_MOPS_HPP

#include <vector>

#include "lhkit/family.hpp"
#include "lhkit/forms.hpp"
#include "lhkit/linsolve.hpp"
#include "lhkit/polynomial.hpp"

namespace lhkit {

/// P_0..P_N of a monic orthogonal polynomial sequence; p[n] is monic of
/// degree exactly n.
struct PolySeq {
    std::vector<Polynomial> p;
    const Polynomial& operator[](int n) const { return p.at(static_cast<size_t>(n)); }
    int max_index() const { return static_cast<int>(p.size()) - 1; }
};

/// Three-term recurrence: P_0 = 1, P_1 = x - beta_0,
/// P_{n+2} = (x - beta_{n+1}) P_{n+1} - gamma_{n+1} P_n.
PolySeq generate(const RecurrenceCoeffs& rc, int N);
PolySeq generate(const Family& fam, int N);

/// Associated sequence of order r of a family, as shifted recurrence
/// coefficients.
RecurrenceCoeffs associated(const Family& fam, int r);

/// First associated polynomial via the form action: (u theta_0 P_{n+1})(x).
/// Must agree with the shifted-recurrence path.
Polynomial first_associated_via_action(const MomentSeq& u, const Polynomial& P_np1);

/// Gram matrix <u, P_n P_m> for n, m = 0..N; moments to order 2N are used.
/// Off-diagonal entries vanish for a regular family and the diagonal entry n
/// is gamma_1 ... gamma_n.
Matrix orthogonality_check(const Family& fam, int N);

/// Coefficients theta_mu with q = sum theta_mu P_mu, via
/// theta_mu = <u, q P_mu> / <u, P_mu^2>. A vanishing denominator is a
/// regularity failure, never skipped.
std::vector<Rational> expand_in_basis(const Polynomial& q, const PolySeq& seq,
                                      const MomentSeq& u);

}  // namespace lhkit

#endif
