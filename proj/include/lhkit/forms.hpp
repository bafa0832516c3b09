#ifndef LHKIT_FORMS_HPP
#define LHKIT_FORMS_HPP

#include <vector>

#include "lhkit/errors.hpp"
#include "lhkit/family.hpp"
#include "lhkit/polynomial.hpp"
#include "lhkit/rational.hpp"

namespace lhkit {

/// Finite prefix (u)_0 .. (u)_N of a form's moment sequence. Every operation
/// documents how many trailing moments it consumes, so truncation stays
/// deterministic.
class MomentSeq {
public:
    MomentSeq() = default;
    explicit MomentSeq(std::vector<Rational> m, bool normalized = false);

    int size() const { return static_cast<int>(m_.size()); }
    int max_index() const { return size() - 1; }
    bool normalized() const { return normalized_; }

    const Rational& operator[](int n) const;
    const std::vector<Rational>& values() const { return m_; }

private:
    std::vector<Rational> m_;
    bool normalized_ = false;
};

/// Moments of the normalized form attached to a recurrence: (u)_n is the
/// top-left entry of the n-th power of the monic Jacobi operator with
/// diagonal beta_i, superdiagonal 1, subdiagonal gamma_i. Needs beta_0..
/// beta_{N-1} and gamma_1..gamma_{N-1}; zero gammas are rejected.
MomentSeq moments_from_recurrence(const std::vector<Rational>& betas,
                                  const std::vector<Rational>& gammas, int N);
MomentSeq moments_from_recurrence(const RecurrenceCoeffs& rc, int N);
MomentSeq moments_of(const Family& fam, int N);

/// (u')_n = -n (u)_{n-1}; same length as the input.
MomentSeq form_derivative(const MomentSeq& u);

/// (f u)_n = sum_k f_k (u)_{n+k}; consumes deg f trailing moments.
MomentSeq poly_times_form(const Polynomial& f, const MomentSeq& u);

/// (u v)_n = sum_{k=0..n} (u)_k (v)_{n-k}. Prefixes must have equal length.
MomentSeq cauchy_product(const MomentSeq& u, const MomentSeq& v);

/// (x^{-1} w)_0 = 0, (x^{-1} w)_n = (w)_{n-1}; one entry longer than the
/// input.
MomentSeq divide_by_x(const MomentSeq& w);

/// (u f)(x) = sum_k f_k sum_{j=0..k} (u)_{k-j} x^j. Needs moments past
/// deg f.
Polynomial form_action(const MomentSeq& u, const Polynomial& f);

/// Moment contraction <u, q> = sum_k q_k (u)_k.
Rational pair_form(const MomentSeq& u, const Polynomial& q);

/// D_0 = -(u theta_0 phi)' - (u theta_0 psi) - (u^2 theta_0^2 B), computed
/// entirely from moments.
Polynomial D0_from_moments(const Family& fam);

/// Entry n of the result is ((phi u)' + psi u + B (x^{-1} u^2))_n for
/// n = 0..N; identically zero exactly when the family satisfies its
/// functional equation.
std::vector<Rational> functional_equation_residual(const Family& fam, int N);

/// Coefficients of z^0, z^{-1}, .., z^{-N} of phi S' - B S^2 - C S - D for
/// the formal Stieltjes series S(z) = -sum (u)_n z^{-n-1}, with C = -phi'-psi
/// and D recovered from moments. All zero exactly when the Riccati equation
/// holds through the requested order.
std::vector<Rational> riccati_residual_series(const Family& fam, int N);

/// Same series with an explicit (C, D) pair, for perturbation studies.
std::vector<Rational> riccati_residual_series(const Family& fam, int N, const Polynomial& C,
                                              const Polynomial& D);

}  // namespace lhkit

#endif
