// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "qfrac/context.hpp"
#include "qfrac/detail/summation.hpp"
#include "qfrac/jackson.hpp"
#include "qfrac/qcore.hpp"
#include "qfrac/truncation.hpp"

namespace qfrac {

/// Order, lower limit, and evaluation policy of one fractional-operator
/// application.
struct OperatorSpec {
    double alpha;     ///< order; > 0 for the integral, >= 0 for the derivative
    QContext ctx;
    double lower;     ///< lower limit a >= 0; must stay below the evaluation point
    Truncation trunc;

    OperatorSpec(double alpha_, QContext ctx_, double lower_ = 0.0, Truncation trunc_ = {})
        : alpha(alpha_), ctx(ctx_), lower(lower_), trunc(trunc_) {
        if (lower < 0.0)
            throw domain_error("OperatorSpec: lower limit must be nonnegative");
    }
};

/// Generalized q-fractional integral
///
///   J^alpha f(x) = ([p+1]_q)^(1-alpha) / Gamma_Q(alpha)
///                  * int_a^x w^p f(w) (x^(p+1) - (wq)^(p+1))^((alpha-1))_Q d_q w,
///
/// with Q = q^(p+1) and a = spec.lower. Expanding the 0-to-x Jackson sum
/// directly cancels every infinite product: the kernel column reduces to
/// the ratio recurrence L_0 = 1, L_{i+1} = L_i (1-Q^(alpha+i))/(1-Q^(i+1)),
/// and the value is
///
///   (1-q)^alpha x^(alpha(p+1)) sum_i Q^i f(x q^i) L_i.
///
/// The a-part (when a > 0) uses the same kernel recurrence seeded by one
/// generalized-power ratio. Truncation follows the Jackson engine's
/// envelope rule.
inline IntegralResult frac_integral(const Integrand& f, double x, const OperatorSpec& spec) {
    check_truncation(spec.trunc);
    if (!(spec.alpha > 0.0))
        throw domain_error("frac_integral: alpha must be positive");
    if (!(x > spec.lower))
        throw domain_error("frac_integral: require x > lower >= 0");

    const double q = spec.ctx.q;
    const double p = spec.ctx.p;
    const double Q = spec.ctx.big_q();
    const double alpha = spec.alpha;
    const double Qa = std::pow(Q, alpha);
    const double geo = Q / (1.0 - Q);
    const Truncation& trunc = spec.trunc;

    const double scale_x = std::pow(1.0 - q, alpha) * std::pow(x, alpha * (p + 1.0));
    detail::CompensatedSum sum;
    detail::TermEnvelope<8> env;
    double L = 1.0;
    double Qi = 1.0;     // Q^i
    double Qip1 = Q;     // Q^(i+1)
    double Qai = Qa;     // Q^(alpha+i)
    double w = x;
    IntegralResult rx;
    long i = 0;
    for (; i < trunc.max_terms; ++i) {
        const double term = Qi * f(w) * L;
        sum.add(term);
        env.push(std::abs(term));
        if (env.full()) {
            const double tail = scale_x * env.max() * geo;
            if (tail <= trunc.tol * std::max(scale_x * std::abs(sum.value()), floor_scale)) {
                rx.converged = true;
                ++i;
                break;
            }
        }
        L *= (1.0 - Qai) / (1.0 - Qip1);
        Qai *= Q;
        Qip1 *= Q;
        Qi *= Q;
        w *= q;
    }
    rx.terms_used = i;
    rx.value = scale_x * sum.value();
    rx.est_tail = scale_x * env.max() * geo;

    if (spec.lower == 0.0)
        return rx;

    // a-part: int_0^a of the same kernel, subtracted from the 0-to-x sum.
    const double a = spec.lower;
    const double ra = std::pow(a / x, p + 1.0);
    EvalResult k0 = gen_power(1.0, Q, alpha - 1.0, spec.ctx, trunc);
    EvalResult g0 = gen_power(1.0, ra * Q, alpha - 1.0, spec.ctx, trunc);
    const double scale_a =
        std::pow(1.0 - q, alpha) * std::pow(a, p + 1.0) * std::pow(x, (p + 1.0) * (alpha - 1.0));
    detail::CompensatedSum suma;
    detail::TermEnvelope<8> enva;
    double M = g0.value / k0.value;
    double rho = ra * Q;             // ra Q^(i+1)
    double rhoQa = ra * Qa;          // ra Q^(alpha+i)
    double Qia = 1.0;
    double wa = a;
    IntegralResult rxa;
    long ia = 0;
    for (; ia < trunc.max_terms; ++ia) {
        const double term = Qia * f(wa) * M;
        suma.add(term);
        enva.push(std::abs(term));
        if (enva.full()) {
            const double tail = std::abs(scale_a) * enva.max() * geo;
            if (tail <= trunc.tol * std::max(std::abs(scale_a) * std::abs(suma.value()),
                                             floor_scale)) {
                rxa.converged = true;
                ++ia;
                break;
            }
        }
        M *= (1.0 - rhoQa) / (1.0 - rho);
        rho *= Q;
        rhoQa *= Q;
        Qia *= Q;
        wa *= q;
    }
    rxa.terms_used = ia;
    rxa.value = scale_a * suma.value();
    rxa.est_tail = std::abs(scale_a) * enva.max() * geo;

    IntegralResult r;
    r.value = rx.value - rxa.value;
    r.terms_used = rx.terms_used + rxa.terms_used + k0.terms_used + g0.terms_used;
    r.est_tail = rx.est_tail + rxa.est_tail;
    r.converged = rx.converged && rxa.converged && k0.converged && g0.converged;
    return r;
}

/// Closed form of J^alpha applied to the power t^(lambda(p+1)) with lower
/// limit 0:
///
///   J^alpha(t^(lambda(p+1)))(x)
///       = ([p+1]_q)^(-alpha) Gamma_Q(lambda+1) / Gamma_Q(lambda+alpha+1)
///         * x^((p+1)(lambda+alpha)).
///
/// At p = 0 this is the familiar power rule of the q-Riemann-Liouville
/// operator, and its q -> 1 limit is the classical one-parameter kernel
/// rule; both are asserted in the test suite.
inline double frac_integral_power_rule(double lambda, double x, const OperatorSpec& spec) {
    if (!(lambda > -1.0))
        throw domain_error("frac_integral_power_rule: lambda must exceed -1");
    if (!(spec.alpha > 0.0))
        throw domain_error("frac_integral_power_rule: alpha must be positive");
    if (spec.lower != 0.0)
        throw domain_error("frac_integral_power_rule: defined for lower limit 0");
    const double Q = spec.ctx.big_q();
    const EvalResult g1 = q_gamma(lambda + 1.0, Q, spec.trunc);
    const EvalResult g2 = q_gamma(lambda + spec.alpha + 1.0, Q, spec.trunc);
    if (!g1.converged || !g2.converged)
        throw convergence_error("frac_integral_power_rule: Gamma product did not converge");
    return std::pow(spec.ctx.bracket_p1(), -spec.alpha) * g1.value / g2.value *
           std::pow(x, (spec.ctx.p + 1.0) * (lambda + spec.alpha));
}

/// Brute-force k-fold nested Jackson integration of
///   int_0^x w_1^p ... int_0^{w_{k-1}} w_k^p f(w_k) d_q w_k ... d_q w_1,
/// the ground-truth oracle for integer orders. Cost grows like the k-th
/// power of the per-level term count, so k is capped at 4.
inline IntegralResult iterated_integral(const Integrand& f, double x, int k, const QContext& ctx,
                                        const Truncation& trunc = {}) {
    check_truncation(trunc);
    if (k < 1 || k > 4)
        throw domain_error("iterated_integral: k must lie in 1..4");
    if (!(x > 0.0))
        throw domain_error("iterated_integral: x must be positive");

    const double q = ctx.q;
    const double p = ctx.p;
    long n = static_cast<long>(
        std::ceil(std::log(trunc.tol * (1.0 - q)) / std::log(q)));
    n = std::max(n, 16L);
    const bool capped = n > trunc.max_terms;
    if (capped)
        n = trunc.max_terms;

    const long total = static_cast<long>(k) * n + 1;
    std::vector<double> pts(static_cast<size_t>(total));
    std::vector<double> wp(static_cast<size_t>(total));
    std::vector<double> g(static_cast<size_t>(total));
    double w = x;
    for (long j = 0; j < total; ++j) {
        pts[static_cast<size_t>(j)] = w;
        wp[static_cast<size_t>(j)] = std::pow(w, p);
        g[static_cast<size_t>(j)] = f(w);
        w *= q;
    }
    for (int level = 1; level <= k; ++level) {
        const long top = static_cast<long>(k - level) * n;
        std::vector<double> next(static_cast<size_t>(top) + 1);
        for (long m = 0; m <= top; ++m) {
            detail::CompensatedSum sum;
            double qi = 1.0;
            for (long i = 0; i < n; ++i) {
                sum.add(qi * wp[static_cast<size_t>(m + i)] * g[static_cast<size_t>(m + i)]);
                qi *= q;
            }
            next[static_cast<size_t>(m)] = (1.0 - q) * pts[static_cast<size_t>(m)] * sum.value();
        }
        for (long m = 0; m <= top; ++m)
            g[static_cast<size_t>(m)] = next[static_cast<size_t>(m)];
    }
    IntegralResult r;
    r.value = g[0];
    r.terms_used = static_cast<long>(k) * n;
    r.est_tail = std::abs(r.value) * static_cast<double>(k) * std::pow(q, static_cast<double>(n)) /
                 (1.0 - q);
    r.converged = !capped;
    return r;
}

/// Integer-order operator through the closed finite-product kernel:
///
///   J^k f(x) = 1 / prod_{n=1}^{k-1} [n(p+1)]_q
///              * int_0^x w^p f(w) prod_{n=0}^{k-2} (x^(p+1) - (wq)^(p+1) Q^n) d_q w.
///
/// The kernel product carries k-1 factors, matching both the iterated
/// integrals and the telescoped fractional kernel at alpha = k.
inline IntegralResult integer_kernel_integral(const Integrand& f, double x, int k,
                                              const QContext& ctx, const Truncation& trunc = {}) {
    check_truncation(trunc);
    if (k < 1 || k > 64)
        throw domain_error("integer_kernel_integral: k must lie in 1..64");
    if (!(x > 0.0))
        throw domain_error("integer_kernel_integral: x must be positive");

    const double q = ctx.q;
    const double p = ctx.p;
    const double Q = ctx.big_q();
    double pref = 1.0;
    for (int n = 1; n <= k - 1; ++n)
        pref *= (1.0 - q) / (1.0 - std::pow(Q, static_cast<double>(n)));

    const double X = std::pow(x, p + 1.0);
    Integrand ig(
        [&f, X, Q, p, q, k](double w) {
            double kernel = 1.0;
            double yQn = std::pow(w * q, p + 1.0);
            for (int n = 0; n <= k - 2; ++n) {
                kernel *= (X - yQn);
                yQn *= Q;
            }
            return std::pow(w, p) * f(w) * kernel;
        },
        "integer-kernel integrand");
    IntegralResult r = jackson_integral(ig, x, q, trunc);
    r.value *= pref;
    r.est_tail *= std::abs(pref);
    return r;
}

/// Generalized q-fractional derivative with diagnostics:
///
///   D^0 f = f;   D^alpha f = (x^{-p} D_q)^n (J^{n-alpha} f),  n = floor(alpha)+1.
///
/// The inner integral is evaluated at the n+1 grid points x, xq, ..., xq^n
/// and the composed difference operator is applied exactly.
inline EvalResult frac_derivative_result(const Integrand& f, double x, const OperatorSpec& spec) {
    if (!(x > 0.0))
        throw domain_error("frac_derivative: x must be positive");
    if (spec.alpha < 0.0)
        throw domain_error("frac_derivative: alpha must be nonnegative");
    if (spec.alpha == 0.0)
        return {f(x), 0, 0.0, true};

    const int n = static_cast<int>(std::floor(spec.alpha)) + 1;
    OperatorSpec inner(static_cast<double>(n) - spec.alpha, spec.ctx, spec.lower, spec.trunc);

    long terms = 0;
    double max_rel_tail = 0.0;
    bool all_converged = true;
    Integrand g(
        [&](double t) {
            IntegralResult ir = frac_integral(f, t, inner);
            terms += ir.terms_used;
            if (ir.value != 0.0)
                max_rel_tail = std::max(max_rel_tail, ir.est_tail / std::abs(ir.value));
            all_converged = all_converged && ir.converged;
            return ir.value;
        },
        "inner fractional integral");
    const double value = composed_xp_dq(g, x, n, spec.ctx);

    EvalResult r;
    r.value = value;
    r.terms_used = terms;
    // crude propagation: each difference pass divides by (1-q) t^(p+1)
    const double amp = std::pow(
        (1.0 - spec.ctx.q) * std::pow(x * std::pow(spec.ctx.q, n), spec.ctx.p + 1.0),
        -static_cast<double>(n));
    r.est_tail = max_rel_tail * (std::abs(value) + 1.0) * std::max(1.0, amp);
    r.converged = all_converged;
    return r;
}

/// Value-only form of the generalized q-fractional derivative; throws
/// convergence_error when an inner integral misses its tolerance.
inline double frac_derivative(const Integrand& f, double x, const OperatorSpec& spec) {
    EvalResult r = frac_derivative_result(f, x, spec);
    if (!r.converged)
        throw convergence_error("frac_derivative: inner integral did not converge");
    return r.value;
}

/// Heine-type summation identity over base Q = q^(p+1). Returns the pair
/// (lhs, rhs) of
///
///   sum_{t>=0} (1 - mu Q^(1-t))^((alpha-1))_Q (1 - Q^(1+t))^((beta-1))_Q Q^(t alpha)
///     =?  (1-Q)^((alpha-1)) (1-Q)^((beta-1)) / (1-Q)^((alpha+beta-1))
///         * (1 - mu Q)^((alpha+beta-1))
///
/// for residual reporting. The identity is a theorem precisely when the
/// sum terminates, i.e. mu = 0 or mu = Q^m for integer m >= 0 (then the
/// first factor vanishes for all t > m); callers probing other mu values
/// receive the honest, non-matching pair.
inline std::pair<double, double> heine_type_sum(double mu, double alpha, double beta,
                                                const QContext& ctx, const Truncation& trunc = {}) {
    check_truncation(trunc);
    if (mu < 0.0 || mu >= 1.0)
        throw domain_error("heine_type_sum: mu must lie in [0,1)");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw domain_error("heine_type_sum: alpha and beta must be positive");

    const double Q = ctx.big_q();
    const double Qalpha = std::pow(Q, alpha);
    const double geo = Q / (1.0 - Q);
    detail::CompensatedSum sum;
    detail::TermEnvelope<8> env;
    double y1 = mu * Q;   // mu Q^(1-t)
    double y2 = Q;        // Q^(1+t)
    double Qta = 1.0;     // Q^(t alpha)
    bool converged = false;
    long t = 0;
    for (; t < trunc.max_terms; ++t) {
        const double f1 = gen_power(1.0, y1, alpha - 1.0, ctx, trunc).value;
        const double f2 = gen_power(1.0, y2, beta - 1.0, ctx, trunc).value;
        const double term = f1 * f2 * Qta;
        sum.add(term);
        env.push(std::abs(term));
        if (env.full()) {
            const double tail = env.max() * geo;
            if (tail <= trunc.tol * std::max(std::abs(sum.value()), floor_scale)) {
                converged = true;
                break;
            }
        }
        y1 /= Q;
        y2 *= Q;
        Qta *= Qalpha;
    }
    if (!converged)
        throw convergence_error("heine_type_sum: t-sum did not converge within max_terms");

    const double c1 = gen_power(1.0, Q, alpha - 1.0, ctx, trunc).value;
    const double c2 = gen_power(1.0, Q, beta - 1.0, ctx, trunc).value;
    const double c3 = gen_power(1.0, Q, alpha + beta - 1.0, ctx, trunc).value;
    const double rhs = c1 * c2 / c3 * gen_power(1.0, mu * Q, alpha + beta - 1.0, ctx, trunc).value;
    return {sum.value(), rhs};
}

/// Beta-type Jackson integral with lower limit a. Returns (lhs, rhs) of
///
///   int_a^x t^p (x^(p+1) - (qt)^(p+1))^((alpha-1))_Q (t^(p+1) - a^(p+1))^((lambda))_Q d_q t
///     = (1-q) (1-Q)^((alpha-1)) (1-Q)^((lambda)) / (1-Q)^((alpha+lambda))
///       * (x^(p+1) - a^(p+1))^((alpha+lambda))_Q.
///
/// The 0-to-a piece of the left side is dropped analytically for
/// non-integer lambda: on the grid t = a q^i the second kernel's ratio is
/// exactly Q^(-i), a zero of the generalized power, for every a. For
/// integer lambda the kernel is the telescoped product, nonzero below a,
/// and the two-sided Jackson difference is computed.
inline std::pair<double, double> beta_type_integral(double a, double x, double alpha,
                                                    double lambda, const QContext& ctx,
                                                    const Truncation& trunc = {}) {
    check_truncation(trunc);
    if (!(x > 0.0) || a < 0.0 || !(a < x))
        throw domain_error("beta_type_integral: require 0 <= a < x");
    if (!(alpha > 0.0))
        throw domain_error("beta_type_integral: alpha must be positive");
    if (!(lambda > -1.0))
        throw domain_error("beta_type_integral: lambda must exceed -1");

    const double q = ctx.q;
    const double p = ctx.p;
    const double Q = ctx.big_q();
    const double X = std::pow(x, p + 1.0);
    const double A = std::pow(a, p + 1.0);

    Integrand ig(
        [&](double w) {
            const double k1 = gen_power(X, std::pow(w * q, p + 1.0), alpha - 1.0, ctx, trunc).value;
            const double k2 = a == 0.0
                                  ? std::pow(w, (p + 1.0) * lambda)
                                  : gen_power(std::pow(w, p + 1.0), A, lambda, ctx, trunc).value;
            return std::pow(w, p) * k1 * k2;
        },
        "beta-type integrand");

    IntegralResult lx = jackson_integral(ig, x, q, trunc);
    if (!lx.converged)
        throw convergence_error("beta_type_integral: Jackson sum did not converge");
    double lhs = lx.value;
    const bool integer_lambda = lambda >= 0.0 && lambda == std::floor(lambda);
    if (a > 0.0 && integer_lambda) {
        IntegralResult la = jackson_integral(ig, a, q, trunc);
        if (!la.converged)
            throw convergence_error("beta_type_integral: Jackson sum did not converge");
        lhs -= la.value;
    }

    const double c1 = gen_power(1.0, Q, alpha - 1.0, ctx, trunc).value;
    const double c2 = gen_power(1.0, Q, lambda, ctx, trunc).value;
    const double c3 = gen_power(1.0, Q, alpha + lambda, ctx, trunc).value;
    const double rhs = (1.0 - q) * c1 * c2 / c3 * gen_power(X, A, alpha + lambda, ctx, trunc).value;
    return {lhs, rhs};
}

/// Evaluates the kernel-to-logarithm limit pair near the corner q -> 1-,
/// p -> -1+: returns
///
///   ( (t^(p+1) - a^(p+1))^((lambda))_Q / [p+1]^((lambda)),  (log(t/a))^lambda )
///
/// at q = 1 - eps_q, p = -1 + eps_p. The products converge slowly in this
/// corner; max_terms must scale like 1/(eps_q eps_p).
inline std::pair<double, double> hadamard_kernel_limit_check(double t, double a, double lambda,
                                                             double eps_q, double eps_p,
                                                             const Truncation& trunc = {}) {
    if (!(a > 0.0) || !(t > a))
        throw domain_error("hadamard_kernel_limit_check: require 0 < a < t");
    if (lambda < 0.0)
        throw domain_error("hadamard_kernel_limit_check: lambda must be nonnegative");
    if (!(eps_q > 0.0) || !(eps_q < 1.0) || !(eps_p > 0.0))
        throw domain_error("hadamard_kernel_limit_check: eps_q in (0,1) and eps_p > 0 required");
    const QContext ctx(1.0 - eps_q, -1.0 + eps_p);
    EvalResult num =
        gen_power(std::pow(t, ctx.p + 1.0), std::pow(a, ctx.p + 1.0), lambda, ctx, trunc);
    if (!num.converged)
        throw convergence_error("hadamard_kernel_limit_check: kernel product did not converge");
    const double qside = num.value / bracket_exponent(lambda, ctx, trunc);
    const double classical = std::pow(std::log(t / a), lambda);
    return {qside, classical};
}

namespace detail {

// Adaptive Simpson refinement on [lo, hi] with whole-interval estimate s.
inline double adaptive_simpson(const std::function<double(double)>& g, double lo, double hi,
                               double flo, double fmid, double fhi, double s, double tol,
                               int depth) {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid);
    const double rm = 0.5 * (mid + hi);
    const double flm = g(lm);
    const double frm = g(rm);
    const double h = hi - lo;
    const double sl = h / 12.0 * (flo + 4.0 * flm + fmid);
    const double sr = h / 12.0 * (fmid + 4.0 * frm + fhi);
    const double err = sl + sr - s;
    if (std::abs(err) <= 15.0 * tol || depth >= 48)
        return sl + sr + err / 15.0;
    return adaptive_simpson(g, lo, mid, flo, flm, fmid, sl, 0.5 * tol, depth + 1) +
           adaptive_simpson(g, mid, hi, fmid, frm, fhi, sr, 0.5 * tol, depth + 1);
}

inline double integrate_adaptive(const std::function<double(double)>& g, double lo, double hi,
                                 double tol) {
    const double flo = g(lo);
    const double fhi = g(hi);
    const double fmid = g(0.5 * (lo + hi));
    if (!std::isfinite(flo) || !std::isfinite(fhi) || !std::isfinite(fmid))
        throw convergence_error("classical_reference: integrand not finite on [lo, hi]");
    const double s = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    const double r = adaptive_simpson(g, lo, hi, flo, fmid, fhi, s, tol, 0);
    if (!std::isfinite(r))
        throw convergence_error("classical_reference: quadrature failed");
    return r;
}

}  // namespace detail

/// Classical q -> 1 limit of the operator (the one-parameter kernel
/// integral):
///
///   (p+1)^(1-alpha)/Gamma(alpha) int_0^x w^p f(w) (x^(p+1) - w^(p+1))^(alpha-1) dw.
///
/// The substitution u = w^(p+1), v = (x^(p+1)-u)^alpha removes the kernel
/// singularity at w = x exactly, leaving
///
///   (p+1)^(-alpha)/Gamma(alpha+1) int_0^{x^(alpha(p+1))} f((X - v^(1/alpha))^(1/(p+1))) dv,
///
/// which plain adaptive quadrature handles. Used only as the q -> 1 oracle.
inline double classical_reference(const Integrand& f, double x, double alpha, double p) {
    if (!(x > 0.0))
        throw domain_error("classical_reference: x must be positive");
    if (!(alpha > 0.0))
        throw domain_error("classical_reference: alpha must be positive");
    if (!(p > -1.0))
        throw domain_error("classical_reference: p must exceed -1");
    const double X = std::pow(x, p + 1.0);
    const double vmax = std::pow(X, alpha);
    const double wfloor = x * 1e-14;  // keeps f off the w = 0 endpoint
    auto g = [&](double v) {
        const double u = X - std::pow(v, 1.0 / alpha);
        const double w = std::max(std::pow(std::max(u, 0.0), 1.0 / (p + 1.0)), wfloor);
        return f(w);
    };
    const double integral = detail::integrate_adaptive(g, 0.0, vmax, 1e-11 * vmax);
    return std::pow(p + 1.0, -alpha) / std::tgamma(alpha + 1.0) * integral;
}

/// q-Riemann-Liouville fractional integral built directly from its own
/// kernel (x - qt)^((alpha-1)) over base q; the p = 0 reduction target.
inline IntegralResult q_riemann_integral(const Integrand& f, double x, double alpha, double q,
                                         const Truncation& trunc = {}) {
    detail::check_q(q);
    if (!(alpha > 0.0))
        throw domain_error("q_riemann_integral: alpha must be positive");
    if (!(x > 0.0))
        throw domain_error("q_riemann_integral: x must be positive");
    const QContext ctx(q, 0.0);
    EvalResult gam = q_gamma(alpha, q, trunc);
    Integrand ig(
        [&](double t) {
            return gen_power(x, q * t, alpha - 1.0, ctx, trunc).value * f(t);
        },
        "q-Riemann integrand");
    IntegralResult r = jackson_integral(ig, x, q, trunc);
    r.value /= gam.value;
    r.est_tail /= std::abs(gam.value);
    r.converged = r.converged && gam.converged;
    return r;
}

}  // namespace qfrac
