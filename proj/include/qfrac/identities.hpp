// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qfrac/jackson.hpp"
#include "qfrac/operators.hpp"
#include "qfrac/qcore.hpp"

namespace qfrac {

/// Residual summary of one verified identity over its parameter grid.
struct VerificationReport {
    std::string identity_name;
    std::string grid;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

namespace detail {

class Residuals {
  public:
    // got vs want, relative to max(|want|, scale_floor)
    void add(double got, double want, double scale_floor = 0.0) {
        const double abs = std::abs(got - want);
        const double den = std::max(std::abs(want), std::max(scale_floor, 1e-30));
        if (abs > max_abs_) max_abs_ = abs;
        if (abs / den > max_rel_) max_rel_ = abs / den;
    }

    VerificationReport report(std::string name, std::string grid, double threshold) const {
        VerificationReport r;
        r.identity_name = std::move(name);
        r.grid = std::move(grid);
        r.max_abs_err = max_abs_;
        r.max_rel_err = max_rel_;
        r.threshold = threshold;
        r.pass = max_rel_ <= threshold;
        return r;
    }

  private:
    double max_abs_ = 0.0;
    double max_rel_ = 0.0;
};

inline std::string fmt(const char* format, double a) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), format, a);
    return buf;
}

inline std::string fmt(const char* format, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), format, a, b);
    return buf;
}

// J^alpha(J^beta f)(x) with the inner operator memoized on the outer grid.
inline double composed_frac_integral(const Integrand& f, double x, double alpha, double beta,
                                     const QContext& ctx, const Truncation& trunc) {
    OperatorSpec inner_spec(beta, ctx, 0.0, trunc);
    std::map<double, double> memo;
    Integrand inner(
        [&](double w) {
            auto it = memo.find(w);
            if (it != memo.end())
                return it->second;
            const double v = frac_integral(f, w, inner_spec).value;
            memo.emplace(w, v);
            return v;
        },
        "inner operator");
    return frac_integral(inner, x, OperatorSpec(alpha, ctx, 0.0, trunc)).value;
}

}  // namespace detail

namespace identities {

inline VerificationReport gamma_recurrence(const QContext&, const Truncation& trunc) {
    detail::Residuals res;
    for (double q : {0.1, 0.5, 0.9}) {
        for (int i = 1; i <= 50; ++i) {
            const double t = static_cast<double>(i) / 10.0;
            const double lhs = q_gamma(t + 1.0, q, trunc).value;
            const double rhs = q_number(t, q) * q_gamma(t, q, trunc).value;
            res.add(lhs, rhs);
        }
    }
    return res.report("gamma-recurrence", "t=0.1..5.0 step 0.1, q in {0.1,0.5,0.9}", 1e-10);
}

inline VerificationReport prefactor_consistency(const QContext&, const Truncation& trunc) {
    detail::Residuals res;
    for (double alpha : {0.3, 1.0, 2.7}) {
        for (double p : {0.0, 0.5, 2.0}) {
            for (double q : {0.3, 0.7}) {
                const QContext c(q, p);
                const double Q = c.big_q();
                const double f1 =
                    1.0 / (bracket_exponent(alpha - 1.0, c, trunc) * q_gamma(alpha, q, trunc).value);
                const double f2 = std::pow(1.0 - q, alpha - 1.0) /
                                  gen_power(1.0, Q, alpha - 1.0, c, trunc).value;
                const double f3 =
                    std::pow(c.bracket_p1(), 1.0 - alpha) / q_gamma(alpha, Q, trunc).value;
                res.add(f1, f2);
                res.add(f3, f2);
            }
        }
    }
    return res.report("prefactor-consistency",
                      "alpha in {0.3,1,2.7}, p in {0,0.5,2}, q in {0.3,0.7}", 1e-12);
}

inline VerificationReport integer_consistency(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const std::vector<Integrand> fs = {
        Integrand([](double) { return 1.0; }, "1"),
        Integrand([](double t) { return t; }, "t"),
        Integrand([](double t) { return t * t; }, "t^2"),
    };
    for (int k = 1; k <= 3; ++k) {
        for (const auto& f : fs) {
            for (double x : {0.5, 1.0}) {
                const double a = frac_integral(f, x, OperatorSpec(k, ctx, 0.0, trunc)).value;
                const double b = integer_kernel_integral(f, x, k, ctx, trunc).value;
                const double c = iterated_integral(f, x, k, ctx, trunc).value;
                res.add(a, c);
                res.add(b, c);
            }
        }
    }
    return res.report("integer-consistency",
                      detail::fmt("k in {1,2,3}, f in {1,t,t^2}, x in {0.5,1}, q=%g p=%g",
                                  ctx.q, ctx.p),
                      1e-6);
}

inline VerificationReport power_rule(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    for (double lambda : {0.0, 0.5, 1.0, 2.0}) {
        for (double alpha : {0.5, 1.0, 1.7}) {
            for (double x : {0.7, 1.0}) {
                OperatorSpec spec(alpha, ctx, 0.0, trunc);
                Integrand f([lambda, &ctx](double t) { return std::pow(t, lambda * (ctx.p + 1.0)); },
                            "t^(lambda(p+1))");
                const double numeric = frac_integral(f, x, spec).value;
                const double closed = frac_integral_power_rule(lambda, x, spec);
                res.add(numeric, closed);
            }
        }
    }
    return res.report("power-rule",
                      detail::fmt("lambda in {0,0.5,1,2}, alpha in {0.5,1,1.7}, q=%g p=%g",
                                  ctx.q, ctx.p),
                      1e-9);
}

inline VerificationReport semigroup(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const double p = ctx.p;
    const std::vector<Integrand> fs = {
        Integrand([](double) { return 1.0; }, "1"),
        Integrand([](double t) { return t; }, "t"),
        Integrand([p](double t) { return std::pow(t, p + 1.0); }, "t^(p+1)"),
        Integrand([](double t) { return t * t; }, "t^2"),
    };
    for (double alpha : {0.5, 1.0, 1.5}) {
        for (double beta : {0.5, 1.0, 1.5}) {
            for (const auto& f : fs) {
                for (double x : {0.5, 1.0}) {
                    const double lhs = detail::composed_frac_integral(f, x, alpha, beta, ctx, trunc);
                    const double rhs =
                        frac_integral(f, x, OperatorSpec(alpha + beta, ctx, 0.0, trunc)).value;
                    res.add(lhs, rhs);
                }
            }
        }
    }
    return res.report("semigroup",
                      detail::fmt("(alpha,beta) in {0.5,1,1.5}^2, x in {0.5,1}, q=%g p=%g",
                                  ctx.q, ctx.p),
                      1e-7);
}

inline VerificationReport left_inverse(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const std::vector<Integrand> fs = {
        Integrand([](double) { return 1.0; }, "1"),
        Integrand([](double t) { return t; }, "t"),
        Integrand([](double t) { return 1.0 + 2.0 * t - t * t; }, "1+2t-t^2"),
    };
    for (double alpha : {0.25, 0.5, 0.75}) {
        for (const auto& f : fs) {
            for (double x : {0.6, 1.0}) {
                OperatorSpec js(alpha, ctx, 0.0, trunc);
                Integrand jf([&](double w) { return frac_integral(f, w, js).value; },
                             "J^alpha f");
                const double got = frac_derivative(jf, x, OperatorSpec(alpha, ctx, 0.0, trunc));
                const double want = f(x);
                res.add(got, want, 1.0);
            }
        }
    }
    return res.report("left-inverse",
                      detail::fmt("alpha in {0.25,0.5,0.75}, deg<=2 polys, q=%g p=%g",
                                  ctx.q, ctx.p),
                      1e-6);
}

/// mu is sampled on the geometric grid {0, Q, Q^2} where the summation
/// identity is a theorem (the sum terminates); off-grid mu values do not
/// satisfy it.
inline VerificationReport lemma5(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const double Q = ctx.big_q();
    for (double mu : {0.0, Q, Q * Q}) {
        for (double alpha : {0.5, 1.5}) {
            for (double beta : {0.5, 1.5}) {
                auto [lhs, rhs] = heine_type_sum(mu, alpha, beta, ctx, trunc);
                res.add(lhs, rhs);
            }
        }
    }
    return res.report("lemma5",
                      detail::fmt("mu in {0,Q,Q^2}, alpha,beta in {0.5,1.5}, q=%g p=%g",
                                  ctx.q, ctx.p),
                      1e-8);
}

inline VerificationReport lemma6(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const double x = 1.0;
    for (double a : {0.0, x * ctx.q * ctx.q}) {
        for (double alpha : {0.5, 1.5}) {
            for (double lambda : {0.0, 0.5}) {
                auto [lhs, rhs] = beta_type_integral(a, x, alpha, lambda, ctx, trunc);
                res.add(lhs, rhs);
            }
        }
    }
    return res.report("lemma6",
                      detail::fmt("a in {0,xq^2}, alpha in {0.5,1.5}, lambda in {0,0.5}, q=%g p=%g",
                                  ctx.q, ctx.p),
                      1e-8);
}

inline VerificationReport p0_reduction(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const QContext c0(ctx.q, 0.0);
    for (double lambda : {0.0, 0.5, 1.0, 2.0}) {
        Integrand f([lambda](double t) { return std::pow(t, lambda); }, "t^lambda");
        for (double alpha : {0.5, 1.0, 1.5}) {
            for (double x : {0.5, 1.0}) {
                const double lhs = frac_integral(f, x, OperatorSpec(alpha, c0, 0.0, trunc)).value;
                const double rhs = q_riemann_integral(f, x, alpha, ctx.q, trunc).value;
                res.add(lhs, rhs);
            }
        }
    }
    return res.report("p0-reduction",
                      detail::fmt("p=0, lambda in {0,0.5,1,2}, alpha in {0.5,1,1.5}, q=%g", ctx.q),
                      1e-10);
}

inline VerificationReport q1_limit(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const double p = ctx.p;
    const QContext corner(1.0 - 1e-3, p);
    Truncation big = trunc;
    big.max_terms = std::max(big.max_terms, 100000L);
    const std::vector<Integrand> fs = {
        Integrand([](double) { return 1.0; }, "1"),
        Integrand([p](double t) { return std::pow(t, p + 1.0); }, "t^(p+1)"),
    };
    for (const auto& f : fs) {
        for (double alpha : {0.5, 1.5}) {
            const double x = 1.0;
            const double qv = frac_integral(f, x, OperatorSpec(alpha, corner, 0.0, big)).value;
            const double cl = classical_reference(f, x, alpha, p);
            res.add(qv, cl);
        }
    }
    return res.report("q1-limit",
                      detail::fmt("q=1-1e-3, f in {1,t^(p+1)}, alpha in {0.5,1.5}, p=%g", p),
                      1e-2);
}

inline VerificationReport hadamard_kernel(const QContext&, const Truncation& trunc) {
    detail::Residuals res;
    Truncation big = trunc;
    big.max_terms = std::max(big.max_terms, 200000L);
    const double e = std::exp(1.0);
    const double cells[3][3] = {{2.0, 1.0, 1.0}, {2.0, 1.0, 2.0}, {e, 1.0, 1.0}};
    for (const auto& cell : cells) {
        auto [qside, classical] =
            hadamard_kernel_limit_check(cell[0], cell[1], cell[2], 1e-3, 1e-2, big);
        res.add(qside, classical);
    }
    return res.report("hadamard-kernel",
                      "(t,a,lambda) in {(2,1,1),(2,1,2),(e,1,1)}, eps_q=1e-3, eps_p=1e-2", 5e-2);
}

inline VerificationReport interchange(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const double q = ctx.q;
    const std::vector<Integrand> fs = {
        Integrand([](double t) { return t * t * t * t - 2.0 * t * t + 3.0 * t; },
                  "t^4-2t^2+3t"),
        Integrand([](double t) { return 1.0 + t * t * t; }, "1+t^3"),
    };
    for (const auto& f : fs) {
        for (double x : {0.5, 1.0, 2.0}) {
            Integrand inner([&](double v) { return jackson_integral(f, v, q, trunc).value; },
                            "inner integral");
            const double nested = jackson_integral(inner, x, q, trunc).value;
            Integrand weighted([&](double s) { return (x - q * s) * f(s); }, "(x-qs) f");
            const double single = jackson_integral(weighted, x, q, trunc).value;
            res.add(nested, single);
        }
    }
    return res.report("interchange",
                      detail::fmt("deg<=4 polys, x in {0.5,1,2}, q=%g", q), 1e-10);
}

inline VerificationReport by_parts(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const double q = ctx.q;
    struct Poly {
        double c0, c1, c2, c3, c4;
        double operator()(double t) const {
            return c0 + t * (c1 + t * (c2 + t * (c3 + t * c4)));
        }
    };
    const std::vector<Poly> polys = {
        {1.0, -2.0, 0.5, 0.0, 0.25}, {0.0, 1.0, 0.0, -1.0, 0.0}, {2.0, 0.0, 3.0, 0.0, 0.0}};
    const std::vector<std::pair<double, double>> ranges = {{0.25, 1.0}, {0.5, 2.0}, {0.1, 0.7}};
    for (size_t i = 0; i < polys.size(); ++i) {
        for (size_t j = 0; j < polys.size(); ++j) {
            if (i == j)
                continue;
            const Poly& fp = polys[i];
            const Poly& gp = polys[j];
            for (auto [a, b] : ranges) {
                Integrand f([fp](double t) { return fp(t); }, "f");
                Integrand g([gp](double t) { return gp(t); }, "g");
                Integrand g_dqf([&](double t) { return gp(t) * q_derivative(f, t, q); },
                                "g D_q f");
                Integrand fq_dqg([&](double t) { return fp(q * t) * q_derivative(g, t, q); },
                                 "f(q.) D_q g");
                const double i1 = jackson_integral_between(g_dqf, a, b, q, trunc).value;
                const double i2 = jackson_integral_between(fq_dqg, a, b, q, trunc).value;
                const double boundary = gp(b) * fp(b) - gp(a) * fp(a);
                const double scale =
                    std::max({1.0, std::abs(i1), std::abs(i2), std::abs(boundary)});
                res.add(i1 + i2, boundary, scale);
            }
        }
    }
    return res.report("by-parts",
                      detail::fmt("deg<=4 poly pairs, 0<a<b grid, q=%g", q), 1e-10);
}

inline VerificationReport beta_crosscheck(const QContext& ctx, const Truncation& trunc) {
    detail::Residuals res;
    const double q = ctx.q;
    // Gamma: product form vs the defining Jackson integral with E_q weight
    for (double t : {0.5, 1.5, 2.5}) {
        const double prod_form = q_gamma(t, q, trunc).value;
        Integrand ig([&](double w) { return std::pow(w, t - 1.0) * E_q(-q * w, q, trunc).value; },
                     "x^(t-1) E_q(-qx)");
        const double integral_form = jackson_integral(ig, 1.0 / (1.0 - q), q, trunc).value;
        res.add(integral_form, prod_form);
    }
    // Beta: Gamma-ratio form vs the defining Jackson integral
    const QContext c0(q, 0.0);
    const double grid[3][2] = {{0.5, 0.5}, {2.0, 1.0}, {1.5, 2.5}};
    for (const auto& ts : grid) {
        const double t = ts[0], s = ts[1];
        const double ratio_form = q_beta(t, s, q, trunc).value;
        Integrand ig(
            [&](double w) {
                return std::pow(w, t - 1.0) * gen_power(1.0, q * w, s - 1.0, c0, trunc).value;
            },
            "x^(t-1) (1-qx)^((s-1))");
        const double integral_form = jackson_integral(ig, 1.0, q, trunc).value;
        res.add(integral_form, ratio_form);
    }
    return res.report("beta-crosscheck",
                      detail::fmt("Gamma t in {0.5,1.5,2.5}; Beta (t,s) grid, q=%g", q),
                      1e-8);
}

}  // namespace identities

/// Canonical identity names accepted by run_identity_suite, in report order.
inline const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "semigroup",      "power-rule",          "left-inverse", "lemma5",
        "lemma6",         "p0-reduction",        "q1-limit",     "hadamard-kernel",
        "integer-consistency", "gamma-recurrence", "beta-crosscheck", "interchange",
        "by-parts",       "prefactor-consistency"};
    return names;
}

/// Runs the named identities at the given context; reports come back in the
/// canonical registry order. Unknown names throw domain_error; individual
/// identity failures are reported in the VerificationReport, not thrown.
inline std::vector<VerificationReport> run_identity_suite(const std::vector<std::string>& which,
                                                          const QContext& ctx,
                                                          const Truncation& trunc = {}) {
    using Runner = VerificationReport (*)(const QContext&, const Truncation&);
    static const std::map<std::string, Runner> registry = {
        {"semigroup", identities::semigroup},
        {"power-rule", identities::power_rule},
        {"left-inverse", identities::left_inverse},
        {"lemma5", identities::lemma5},
        {"lemma6", identities::lemma6},
        {"p0-reduction", identities::p0_reduction},
        {"q1-limit", identities::q1_limit},
        {"hadamard-kernel", identities::hadamard_kernel},
        {"integer-consistency", identities::integer_consistency},
        {"gamma-recurrence", identities::gamma_recurrence},
        {"beta-crosscheck", identities::beta_crosscheck},
        {"interchange", identities::interchange},
        {"by-parts", identities::by_parts},
        {"prefactor-consistency", identities::prefactor_consistency}};

    for (const auto& name : which)
        if (registry.find(name) == registry.end())
            throw domain_error("unknown identity: " + name);

    std::vector<VerificationReport> out;
    for (const auto& name : identity_names()) {
        bool requested = false;
        for (const auto& w : which)
            if (w == name) {
                requested = true;
                break;
            }
        if (requested)
            out.push_back(registry.at(name)(ctx, trunc));
    }
    return out;
}

}  // namespace qfrac
