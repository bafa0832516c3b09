#include "lhkit/mops.hpp"

#include <stdexcept>

namespace lhkit {

PolySeq generate(const RecurrenceCoeffs& rc, int N) {
    if (N < 0) throw std::invalid_argument("generate: N must be >= 0");
    PolySeq s;
    s.p.reserve(N + 1);
    s.p.push_back(Polynomial(1));
    if (N == 0) return s;
    const Polynomial X = Polynomial::x();
    s.p.push_back(X - Polynomial(rc.beta(0)));
    for (int n = 2; n <= N; ++n) {
        const Rational g = rc.gamma(n - 1);
        if (g.is_zero()) throw RegularityError("gamma(" + std::to_string(n - 1) + ") != 0", n - 1);
        s.p.push_back((X - Polynomial(rc.beta(n - 1))) * s.p[n - 1] - g * s.p[n - 2]);
    }
    return s;
}

PolySeq generate(const Family& fam, int N) { return generate(coeffs(fam), N); }

RecurrenceCoeffs associated(const Family& fam, int r) { return associated(coeffs(fam), r); }

Polynomial first_associated_via_action(const MomentSeq& u, const Polynomial& P_np1) {
    return form_action(u, P_np1.theta(Rational(0)));
}

Matrix orthogonality_check(const Family& fam, int N) {
    if (N < 0) throw std::invalid_argument("orthogonality_check: N must be >= 0");
    const MomentSeq u = moments_of(fam, 2 * N);
    const PolySeq seq = generate(fam, N);
    Matrix g(N + 1, Vector(N + 1));
    for (int n = 0; n <= N; ++n)
        for (int m = 0; m <= n; ++m) {
            g[n][m] = pair_form(u, seq[n] * seq[m]);
            g[m][n] = g[n][m];
        }
    return g;
}

std::vector<Rational> expand_in_basis(const Polynomial& q, const PolySeq& seq,
                                      const MomentSeq& u) {
    const int d = q.is_zero() ? 0 : q.degree();
    if (d > seq.max_index())
        throw TruncationError("expand_in_basis: deg q exceeds the generated sequence");
    std::vector<Rational> theta(d + 1);
    for (int mu = 0; mu <= d; ++mu) {
        const Rational den = pair_form(u, seq[mu] * seq[mu]);
        if (den.is_zero())
            throw RegularityError("<u, P_" + std::to_string(mu) + "^2> != 0", mu);
        theta[mu] = pair_form(u, q * seq[mu]) / den;
    }
    return theta;
}

}  // namespace lhkit
