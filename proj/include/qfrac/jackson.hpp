// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qfrac/context.hpp"
#include "qfrac/detail/summation.hpp"
#include "qfrac/truncation.hpp"

namespace qfrac {

/// An evaluable real function of one positive real variable.
///
/// The engine samples it on geometric grids { b q^i }, so it must be total
/// on (0, b]. Existence of the Jackson integral additionally requires
/// |f(x) x^a| bounded near 0 for some a in [0,1); that contract is the
/// caller's, and violations surface only as non-convergence.
struct Integrand {
    std::function<double(double)> fn;
    std::string label;

    Integrand(std::function<double(double)> f, std::string name = "")
        : fn(std::move(f)), label(std::move(name)) {}

    double operator()(double t) const { return fn(t); }
};

using IntegralResult = EvalResult;

/// Jackson integral from 0 to b:
///
///   int_0^b f(x) d_q x = (1-q) b sum_{i>=0} q^i f(q^i b).
///
/// Terms are accumulated with compensated summation in index order. The
/// running tail bound is the envelope of the last eight term magnitudes
/// times the geometric factor q/(1-q).
inline IntegralResult jackson_integral(const Integrand& f, double b, double q,
                                       const Truncation& trunc = {}) {
    detail::check_q(q);
    check_truncation(trunc);
    if (!(b > 0.0))
        throw domain_error("jackson_integral: b must be positive");

    const double scale = (1.0 - q) * b;
    const double geo = q / (1.0 - q);
    detail::CompensatedSum sum;
    detail::TermEnvelope<8> env;
    double w = b;
    double qi = 1.0;
    IntegralResult r;
    long i = 0;
    for (; i < trunc.max_terms; ++i) {
        const double term = qi * f(w);
        sum.add(term);
        env.push(std::abs(term));
        if (env.full()) {
            const double tail = scale * env.max() * geo;
            if (tail <= trunc.tol * std::max(scale * std::abs(sum.value()), floor_scale)) {
                r.converged = true;
                ++i;
                break;
            }
        }
        qi *= q;
        w *= q;
    }
    r.terms_used = i;
    r.value = scale * sum.value();
    r.est_tail = scale * env.max() * geo;
    return r;
}

/// Definite Jackson integral between 0 <= a <= b, as the difference of the
/// two one-sided integrals.
inline IntegralResult jackson_integral_between(const Integrand& f, double a, double b, double q,
                                               const Truncation& trunc = {}) {
    if (a < 0.0 || a > b)
        throw domain_error("jackson_integral_between: require 0 <= a <= b");
    if (a == b)
        return {0.0, 0, 0.0, true};
    IntegralResult rb = jackson_integral(f, b, q, trunc);
    if (a == 0.0)
        return rb;
    IntegralResult ra = jackson_integral(f, a, q, trunc);
    IntegralResult r;
    r.value = rb.value - ra.value;
    r.terms_used = rb.terms_used + ra.terms_used;
    r.est_tail = rb.est_tail + ra.est_tail;
    r.converged = rb.converged && ra.converged;
    return r;
}

/// Jackson q-difference operator D_q f(x) = (f(x) - f(qx)) / ((1-q) x).
/// An exact two-point formula; no truncation is involved.
inline double q_derivative(const Integrand& f, double x, double q) {
    detail::check_q(q);
    if (!(x > 0.0))
        throw domain_error("q_derivative: x must be positive");
    return (f(x) - f(q * x)) / ((1.0 - q) * x);
}

/// n-fold application of the composed operator g -> t^{-p} D_q g.
///
/// Each application consumes one extra grid point: the n-fold composition
/// needs f at x, xq, ..., xq^n. Evaluation failures of f propagate.
inline double composed_xp_dq(const Integrand& f, double x, int n, const QContext& ctx) {
    if (!(x > 0.0))
        throw domain_error("composed_xp_dq: x must be positive");
    if (n < 1)
        throw domain_error("composed_xp_dq: n must be positive");
    const double q = ctx.q;
    std::vector<double> vals(static_cast<size_t>(n) + 1);
    std::vector<double> pts(static_cast<size_t>(n) + 1);
    double w = x;
    for (int j = 0; j <= n; ++j) {
        pts[static_cast<size_t>(j)] = w;
        vals[static_cast<size_t>(j)] = f(w);
        w *= q;
    }
    // vals[j] holds the current level evaluated at x q^j; each pass applies
    // t^{-p} D_q and shortens the array by one.
    for (int level = 0; level < n; ++level) {
        for (int j = 0; j + level < n; ++j) {
            const double t = pts[static_cast<size_t>(j)];
            vals[static_cast<size_t>(j)] =
                (vals[static_cast<size_t>(j)] - vals[static_cast<size_t>(j) + 1]) /
                ((1.0 - q) * std::pow(t, ctx.p + 1.0));
        }
    }
    return vals[0];
}

}  // namespace qfrac
