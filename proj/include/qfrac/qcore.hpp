// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>

#include "qfrac/context.hpp"
#include "qfrac/detail/summation.hpp"
#include "qfrac/truncation.hpp"

namespace qfrac {

namespace detail {

inline void check_q(double q) {
    if (!(q > 0.0) || !(q < 1.0))
        throw domain_error("q must lie in (0,1)");
}

// Factors within this distance of zero are the rounded images of the exact
// zeros of a q-shifted factorial (the ratio y/x landing on the Q-grid).
inline constexpr double factor_zero_snap = 4e-14;

}  // namespace detail

/// q-analogue of the number a: [a]_q = (1 - q^a) / (1 - q).
inline double q_number(double a, double q) {
    detail::check_q(q);
    return (1.0 - std::pow(q, a)) / (1.0 - q);
}

/// q-factorial [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
inline double q_factorial(int n, double q) {
    detail::check_q(q);
    if (n < 0)
        throw domain_error("q_factorial: n must be nonnegative");
    double prod = 1.0;
    for (int k = 1; k <= n; ++k)
        prod *= q_number(static_cast<double>(k), q);
    return prod;
}

/// Finite q-shifted factorial (a;q)_n = prod_{j=0}^{n-1} (1 - q^j a).
inline double q_pochhammer(double a, double q, int n) {
    detail::check_q(q);
    if (n < 0)
        throw domain_error("q_pochhammer: n must be nonnegative");
    double prod = 1.0;
    double qj = 1.0;
    for (int j = 0; j < n; ++j) {
        prod *= (1.0 - qj * a);
        qj *= q;
    }
    return prod;
}

/// Infinite q-shifted factorial (a;q)_inf = prod_{j>=0} (1 - q^j a).
///
/// The product is truncated at the first index j with |q^j a| below
/// tol*(1-q); the tail estimate uses the log-product bound
/// -sum log(1 - |q^j a|) <= sum |q^j a| / (1 - |q^j a|).
inline EvalResult q_pochhammer_inf(double a, double q, const Truncation& trunc = {}) {
    detail::check_q(q);
    check_truncation(trunc);
    if (a == 0.0)
        return {1.0, 0, 0.0, true};

    const double cutoff = trunc.tol * (1.0 - q);
    double prod = 1.0;
    double aj = a;
    long j = 0;
    for (; j < trunc.max_terms; ++j) {
        if (std::abs(aj) < cutoff)
            break;
        const double factor = 1.0 - aj;
        if (std::abs(factor) <= detail::factor_zero_snap * std::max(1.0, std::abs(aj)))
            return {0.0, j + 1, 0.0, true};
        prod *= factor;
        aj *= q;
    }
    const double head = std::abs(aj);
    EvalResult r;
    r.terms_used = j;
    r.value = prod;
    if (head < 1.0) {
        r.est_tail = std::abs(prod) * head / ((1.0 - q) * (1.0 - head));
        r.converged = r.est_tail <= trunc.tol * std::max(std::abs(r.value), floor_scale);
    } else {
        r.est_tail = std::numeric_limits<double>::infinity();
        r.converged = false;
    }
    return r;
}

/// Gaussian q-binomial coefficient (q;q)_n / ((q;q)_{n-k} (q;q)_k).
inline double q_binomial(int n, int k, double q) {
    detail::check_q(q);
    if (n < 0 || k < 0 || k > n)
        throw domain_error("q_binomial: require 0 <= k <= n");
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, n - k) * q_pochhammer(q, q, k));
}

/// Second q-exponential E_q(z) = prod_{k>=0} (1 + (1-q) q^k z), entire in z.
/// Equals sum q^{n(n-1)/2} z^n / [n]_q!.
inline EvalResult E_q(double z, double q, const Truncation& trunc = {}) {
    detail::check_q(q);
    check_truncation(trunc);
    if (z == 0.0)
        return {1.0, 0, 0.0, true};

    const double c = (1.0 - q) * z;
    const double cutoff = trunc.tol * (1.0 - q);
    double prod = 1.0;
    double ck = c;
    long k = 0;
    for (; k < trunc.max_terms; ++k) {
        if (std::abs(ck) < cutoff)
            break;
        const double factor = 1.0 + ck;
        if (std::abs(factor) <= detail::factor_zero_snap * std::max(1.0, std::abs(ck)))
            return {0.0, k + 1, 0.0, true};
        prod *= factor;
        ck *= q;
    }
    const double head = std::abs(ck);
    EvalResult r;
    r.terms_used = k;
    r.value = prod;
    if (head < 1.0) {
        r.est_tail = std::abs(prod) * head / ((1.0 - q) * (1.0 - head));
        r.converged = r.est_tail <= trunc.tol * std::max(std::abs(r.value), floor_scale);
    } else {
        r.est_tail = std::numeric_limits<double>::infinity();
        r.converged = false;
    }
    return r;
}

/// First q-exponential e_q(z) = sum z^n / [n]_q!, valid for |z| < 1/(1-q).
///
/// Computed through the pole-free product form 1 / prod (1 - (1-q) q^k z),
/// which is the reciprocal of E_q(-z).
inline EvalResult e_q(double z, double q, const Truncation& trunc = {}) {
    detail::check_q(q);
    if (!(std::abs(z) < 1.0 / (1.0 - q)))
        throw domain_error("e_q: |z| must be below 1/(1-q)");
    EvalResult er = E_q(-z, q, trunc);
    EvalResult r;
    r.terms_used = er.terms_used;
    r.converged = er.converged;
    r.value = 1.0 / er.value;
    r.est_tail = er.value != 0.0 ? er.est_tail / (er.value * er.value) : 0.0;
    return r;
}

/// Generalized q-power (x - y)^(alpha) over the base Q = q^(p+1):
///
///   (x - y)^(alpha)_Q = x^alpha (r;Q)_inf / (Q^alpha r;Q)_inf,   r = y/x.
///
/// For nonnegative integer alpha = n this telescopes to the finite product
/// prod_{k=0}^{n-1} (x - y Q^k), which is what the integer branch computes
/// (valid for every y, including y >= x). The fractional branch multiplies
/// the paired factor ratios (1 - r Q^k) / (1 - r Q^{k+alpha}) and, once
/// |r Q^k| has decayed below 3/4, closes the product with the exact
/// geometric resummation of its logarithm, so slowly converging bases
/// (Q near 1) finish within the term cap.
inline EvalResult gen_power(double x, double y, double alpha, const QContext& ctx,
                            const Truncation& trunc = {}) {
    check_truncation(trunc);
    if (!(x > 0.0))
        throw domain_error("gen_power: x must be positive");
    if (y < 0.0)
        throw domain_error("gen_power: y must be nonnegative");
    const double Q = ctx.big_q();

    if (y == 0.0)
        return {std::pow(x, alpha), 0, 0.0, true};

    // Integer exponents: exact telescoping product.
    if (alpha >= 0.0 && alpha == std::floor(alpha) && alpha <= 1e6) {
        const long n = static_cast<long>(alpha);
        double prod = 1.0;
        double yQk = y;
        for (long k = 0; k < n; ++k) {
            prod *= (x - yQk);
            yQk *= Q;
        }
        return {prod, n, 0.0, true};
    }

    const double r = y / x;
    const double Qa = std::pow(Q, alpha);
    const double cutoff = trunc.tol * (1.0 - Q);
    double prod = 1.0;
    double rk = r;
    long k = 0;
    for (; k < trunc.max_terms; ++k) {
        const double num = 1.0 - rk;
        const double den = 1.0 - rk * Qa;
        if (std::abs(num) <= detail::factor_zero_snap * std::max(1.0, std::abs(rk)))
            return {0.0, k + 1, 0.0, true};  // exact zero: r on the Q-grid
        if (std::abs(den) <= detail::factor_zero_snap * std::max(1.0, std::abs(rk * Qa)))
            throw domain_error("gen_power: y/x lies on a pole Q^-(alpha+k)");
        if (std::abs(rk) < cutoff && std::abs(rk * Qa) < cutoff)
            break;
        prod *= num / den;
        rk *= Q;
    }

    EvalResult r_out;
    r_out.terms_used = k;
    const double head = std::max(std::abs(rk), std::abs(rk * Qa));
    if (head < 0.75) {
        // Tail of the log-ratio, summed exactly as a geometric double series:
        //   sum_{j>=k} ln((1-rQ^j)/(1-rQ^{j+alpha}))
        //     = -sum_{m>=1} ((rQ^k)^m - (rQ^k Qa)^m) / (m (1-Q^m))
        double logtail = 0.0;
        double num_m = rk;
        double den_m = rk * Qa;
        double Qm = Q;
        double last = 0.0;
        for (int m = 1; m <= 512; ++m) {
            last = (num_m - den_m) / (m * (1.0 - Qm));
            logtail -= last;
            if (std::abs(last) <= 1e-18 * (1.0 + std::abs(logtail)))
                break;
            num_m *= rk;
            den_m *= rk * Qa;
            Qm *= Q;
        }
        prod *= std::exp(logtail);
        r_out.value = std::pow(x, alpha) * prod;
        r_out.est_tail =
            std::abs(r_out.value) * (std::abs(last) / (1.0 - head) +
                                     static_cast<double>(k) * std::numeric_limits<double>::epsilon());
        r_out.converged = true;
    } else {
        r_out.value = std::pow(x, alpha) * prod;
        r_out.est_tail = std::numeric_limits<double>::infinity();
        r_out.converged = false;
    }
    return r_out;
}

/// q-Gamma function through its product form
///
///   Gamma_q(t) = (1-q)^((t-1)) / (1-q)^(t-1),
///
/// the generalized power taken over base q. The defining Jackson integral
/// with E_q weight is kept as a cross-check in the test suite; the product
/// form avoids the integral's truncation error.
inline EvalResult q_gamma(double t, double q, const Truncation& trunc = {}) {
    detail::check_q(q);
    if (!(t > 0.0))
        throw domain_error("q_gamma: t must be positive");
    EvalResult gp = gen_power(1.0, q, t - 1.0, QContext(q, 0.0), trunc);
    const double scale = std::pow(1.0 - q, 1.0 - t);
    EvalResult r;
    r.value = gp.value * scale;
    r.terms_used = gp.terms_used;
    r.est_tail = gp.est_tail * scale;
    r.converged = gp.converged;
    return r;
}

/// q-Beta function beta_q(t,s) = Gamma_q(t) Gamma_q(s) / Gamma_q(t+s).
/// The Jackson-integral form is a test-suite cross-check.
inline EvalResult q_beta(double t, double s, double q, const Truncation& trunc = {}) {
    if (!(t > 0.0) || !(s > 0.0))
        throw domain_error("q_beta: t and s must be positive");
    const EvalResult gt = q_gamma(t, q, trunc);
    const EvalResult gs = q_gamma(s, q, trunc);
    const EvalResult gts = q_gamma(t + s, q, trunc);
    EvalResult r;
    r.value = gt.value * gs.value / gts.value;
    r.terms_used = gt.terms_used + gs.terms_used + gts.terms_used;
    const double rel = gt.est_tail / std::abs(gt.value) + gs.est_tail / std::abs(gs.value) +
                       gts.est_tail / std::abs(gts.value);
    r.est_tail = std::abs(r.value) * rel;
    r.converged = gt.converged && gs.converged && gts.converged;
    return r;
}

/// Scalar [p+1]^(alpha) normalizing the fractional operator:
///
///   [p+1]^(alpha) = Gamma_Q(alpha+1) / Gamma_q(alpha+1) * ([p+1]_q)^alpha,
///
/// equal to the infinite product prod_{k>=1} [p+1]_{q^k} / [p+1]_{q^{k+alpha}}.
inline double bracket_exponent(double alpha, const QContext& ctx, const Truncation& trunc = {}) {
    if (!(alpha > -1.0))
        throw domain_error("bracket_exponent: alpha must exceed -1");
    const EvalResult gQ = q_gamma(alpha + 1.0, ctx.big_q(), trunc);
    const EvalResult gq = q_gamma(alpha + 1.0, ctx.q, trunc);
    if (!gQ.converged || !gq.converged)
        throw convergence_error("bracket_exponent: Gamma product did not converge");
    return gQ.value / gq.value * std::pow(ctx.bracket_p1(), alpha);
}

}  // namespace qfrac
