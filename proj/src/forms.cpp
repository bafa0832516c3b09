#include "lhkit/forms.hpp"

#include <stdexcept>

namespace lhkit {

MomentSeq::MomentSeq(std::vector<Rational> m, bool normalized)
    : m_(std::move(m)), normalized_(normalized) {
    if (m_.empty()) throw std::invalid_argument("MomentSeq: needs at least (u)_0");
    if (normalized_ && !m_[0].is_one())
        throw std::invalid_argument("MomentSeq: normalized form must have (u)_0 = 1");
}

const Rational& MomentSeq::operator[](int n) const {
    if (n < 0 || n >= size())
        throw TruncationError("MomentSeq: moment " + std::to_string(n) +
                              " beyond available prefix of length " + std::to_string(size()));
    return m_[n];
}

MomentSeq moments_from_recurrence(const std::vector<Rational>& betas,
                                  const std::vector<Rational>& gammas, int N) {
    if (N < 0) throw std::invalid_argument("moments_from_recurrence: N must be >= 0");
    if (static_cast<int>(betas.size()) < N)
        throw TruncationError("moments_from_recurrence: need beta_0..beta_{N-1}");
    if (static_cast<int>(gammas.size()) < (N > 0 ? N - 1 : 0))
        throw TruncationError("moments_from_recurrence: need gamma_1..gamma_{N-1}");
    for (int i = 0; i < N - 1; ++i)
        if (gammas[i].is_zero())
            throw RegularityError("gamma(" + std::to_string(i + 1) + ") != 0 (irregular form)",
                                  i + 1);

    // v holds the coefficients of x^n in the P-basis; the moment is v[0].
    std::vector<Rational> m(N + 1);
    std::vector<Rational> v(N + 1, Rational(0));
    v[0] = Rational(1);
    m[0] = Rational(1);
    for (int n = 1; n <= N; ++n) {
        std::vector<Rational> w(N + 1, Rational(0));
        for (int k = 0; k < n; ++k) {
            if (v[k].is_zero()) continue;
            w[k + 1] += v[k];
            w[k] += betas[k] * v[k];
            if (k > 0) w[k - 1] += gammas[k - 1] * v[k];
        }
        v = std::move(w);
        m[n] = v[0];
    }
    return MomentSeq(std::move(m), true);
}

MomentSeq moments_from_recurrence(const RecurrenceCoeffs& rc, int N) {
    std::vector<Rational> betas, gammas;
    for (int n = 0; n < N; ++n) betas.push_back(rc.beta(n));
    for (int n = 1; n < N; ++n) gammas.push_back(rc.gamma(n));
    return moments_from_recurrence(betas, gammas, N);
}

MomentSeq moments_of(const Family& fam, int N) {
    return moments_from_recurrence(coeffs(fam), N);
}

MomentSeq form_derivative(const MomentSeq& u) {
    std::vector<Rational> d(u.size());
    d[0] = Rational(0);
    for (int n = 1; n < u.size(); ++n) d[n] = Rational(-n) * u[n - 1];
    return MomentSeq(std::move(d));
}

MomentSeq poly_times_form(const Polynomial& f, const MomentSeq& u) {
    if (f.is_zero()) return MomentSeq({Rational(0)});
    const int d = f.degree();
    const int out_len = u.size() - d;
    if (out_len <= 0)
        throw TruncationError("poly_times_form: prefix of length " + std::to_string(u.size()) +
                              " too short for deg f = " + std::to_string(d));
    std::vector<Rational> r(out_len);
    for (int n = 0; n < out_len; ++n) {
        Rational acc(0);
        for (int k = 0; k <= d; ++k) acc += f.coeff(k) * u[n + k];
        r[n] = acc;
    }
    return MomentSeq(std::move(r));
}

MomentSeq cauchy_product(const MomentSeq& u, const MomentSeq& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cauchy_product: prefixes must have equal length");
    std::vector<Rational> r(u.size());
    for (int n = 0; n < u.size(); ++n) {
        Rational acc(0);
        for (int k = 0; k <= n; ++k) acc += u[k] * v[n - k];
        r[n] = acc;
    }
    return MomentSeq(std::move(r));
}

MomentSeq divide_by_x(const MomentSeq& w) {
    std::vector<Rational> r(w.size() + 1);
    r[0] = Rational(0);
    for (int n = 0; n < w.size(); ++n) r[n + 1] = w[n];
    return MomentSeq(std::move(r));
}

Polynomial form_action(const MomentSeq& u, const Polynomial& f) {
    if (f.is_zero()) return Polynomial();
    const int d = f.degree();
    if (u.size() <= d)
        throw TruncationError("form_action: needs moments up to deg f = " + std::to_string(d));
    std::vector<Rational> c(d + 1, Rational(0));
    for (int k = 0; k <= d; ++k) {
        if (f.coeff(k).is_zero()) continue;
        for (int j = 0; j <= k; ++j) c[j] += f.coeff(k) * u[k - j];
    }
    return Polynomial(std::move(c));
}

Rational pair_form(const MomentSeq& u, const Polynomial& q) {
    Rational acc(0);
    for (int k = 0; k <= q.degree(); ++k) {
        if (q.coeff(k).is_zero()) continue;
        acc += q.coeff(k) * u[k];
    }
    return acc;
}

Polynomial D0_from_moments(const Family& fam) {
    const int need = std::max(fam.phi().degree(), std::max(fam.psi().degree(), fam.B().degree()));
    const MomentSeq u = moments_of(fam, std::max(need, 1));
    const MomentSeq u2 = cauchy_product(u, u);
    const Polynomial t1 = form_action(u, fam.phi().theta(Rational(0))).derivative();
    const Polynomial t2 = form_action(u, fam.psi().theta(Rational(0)));
    const Polynomial t3 = form_action(u2, fam.B().theta(Rational(0)).theta(Rational(0)));
    return -t1 - t2 - t3;
}

std::vector<Rational> functional_equation_residual(const Family& fam, int N) {
    if (N < 0) throw std::invalid_argument("functional_equation_residual: N must be >= 0");
    const int L = N + 3;  // moments 0..N+2 cover every term through entry N
    const MomentSeq u = moments_of(fam, L - 1);
    const MomentSeq u2 = cauchy_product(u, u);

    const MomentSeq phi_u_prime = form_derivative(poly_times_form(fam.phi(), u));
    const MomentSeq psi_u = poly_times_form(fam.psi(), u);
    const MomentSeq b_term = poly_times_form(fam.B(), divide_by_x(u2));

    std::vector<Rational> res(N + 1);
    for (int n = 0; n <= N; ++n) res[n] = phi_u_prime[n] + psi_u[n] + b_term[n];
    return res;
}

namespace {

// Truncated series in 1/z: coefficient of z^{-j} at index j, j = 0..J.
using Tail = std::vector<Rational>;

Tail mul_poly_tail(const Polynomial& p, const Tail& s) {
    // (sum_i p_i z^i) * (sum_j s_j z^-j): keeps only exponents <= 0. The
    // input series must reach far enough that dropped terms do not matter for
    // the caller's window; callers pass series valid past their own horizon.
    Tail r(s.size(), Rational(0));
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i).is_zero()) continue;
        for (size_t j = static_cast<size_t>(i); j < s.size(); ++j) {
            r[j - i] += p.coeff(i) * s[j];
        }
    }
    return r;
}

}  // namespace

std::vector<Rational> riccati_residual_series(const Family& fam, int N, const Polynomial& C,
                                              const Polynomial& D) {
    if (N < 0) throw std::invalid_argument("riccati_residual_series: N must be >= 0");
    const int J = N + 2;
    const MomentSeq u = moments_of(fam, J);

    Tail S(J + 1, Rational(0));  // S_j = coeff of z^{-j}
    for (int n = 0; n + 1 <= J; ++n) S[n + 1] = -u[n];

    Tail Sp(J + 1, Rational(0));  // S'
    for (int n = 0; n + 2 <= J; ++n) Sp[n + 2] = Rational(n + 1) * u[n];

    Tail S2(J + 1, Rational(0));  // S^2
    for (int m = 0; m + 2 <= J; ++m) {
        Rational acc(0);
        for (int i = 0; i <= m; ++i) acc += u[i] * u[m - i];
        S2[m + 2] = acc;
    }

    Tail res = mul_poly_tail(fam.phi(), Sp);
    const Tail bs2 = mul_poly_tail(fam.B(), S2);
    const Tail cs = mul_poly_tail(C, S);
    for (size_t j = 0; j < res.size(); ++j) res[j] -= bs2[j] + cs[j];
    // D is constant in the class-zero setting and lands on z^0.
    if (D.degree() > 0)
        throw std::invalid_argument("riccati_residual_series: D must be constant for class zero");
    res[0] -= D.coeff(0);

    res.resize(N + 1);
    return res;
}

std::vector<Rational> riccati_residual_series(const Family& fam, int N) {
    const Polynomial C = -fam.phi().derivative() - fam.psi();
    return riccati_residual_series(fam, N, C, D0_from_moments(fam));
}

}  // namespace lhkit
