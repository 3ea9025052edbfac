// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qfrac/jackson.hpp"
#include "qfrac/qcore.hpp"

using Catch::Approx;
using namespace qfrac;

TEST_CASE("q_number basic values", "[qcore]") {
    CHECK(q_number(0.0, 0.5) == 0.0);
    CHECK(q_number(1.0, 0.5) == 1.0);
    CHECK(q_number(2.0, 0.5) == Approx(1.5).epsilon(1e-15));
    // nonnegative integer a: equals the geometric partial sum 1 + q + ... + q^(a-1)
    for (int a = 0; a <= 8; ++a) {
        double s = 0.0, qk = 1.0;
        for (int k = 0; k < a; ++k) {
            s += qk;
            qk *= 0.7;
        }
        CHECK(q_number(a, 0.7) == Approx(s).margin(1e-14));
    }
    CHECK_THROWS_AS(q_number(1.0, 1.0), domain_error);
    CHECK_THROWS_AS(q_number(1.0, 0.0), domain_error);
}

TEST_CASE("q_number classical limit", "[qcore]") {
    const double q = 1.0 - 1e-6;
    for (double a : {0.5, 1.0, 2.0, 7.3})
        CHECK(std::abs(q_number(a, q) - a) <= 1e-4 * a);
}

TEST_CASE("q_factorial", "[qcore]") {
    CHECK(q_factorial(0, 0.5) == 1.0);
    CHECK(q_factorial(2, 0.5) == Approx(1.5).epsilon(1e-15));
    CHECK(q_factorial(3, 0.5) == Approx(2.625).epsilon(1e-15));
    CHECK_THROWS_AS(q_factorial(-1, 0.5), domain_error);
}

TEST_CASE("q_pochhammer finite", "[qcore]") {
    CHECK(q_pochhammer(0.7, 0.5, 0) == 1.0);
    CHECK(q_pochhammer(0.5, 0.5, 1) == Approx(0.5).epsilon(1e-15));
    CHECK(q_pochhammer(0.5, 0.5, 2) == Approx(0.375).epsilon(1e-15));
}

TEST_CASE("q_pochhammer_inf against long partial product", "[qcore]") {
    CHECK(q_pochhammer_inf(0.0, 0.5).value == 1.0);
    CHECK(q_pochhammer_inf(1.0, 0.5).value == 0.0);
    CHECK(q_pochhammer_inf(1.0, 0.5).converged);

    // oracle: the same product carried to 200 factors
    double oracle = 1.0;
    double aj = 0.5;
    for (int j = 0; j < 200; ++j) {
        oracle *= (1.0 - aj);
        aj *= 0.5;
    }
    Truncation t;
    t.tol = 1e-12;
    EvalResult r = q_pochhammer_inf(0.5, 0.5, t);
    CHECK(r.converged);
    CHECK(r.value == Approx(oracle).epsilon(1e-13));
    CHECK(r.est_tail <= t.tol * std::abs(r.value));
}

TEST_CASE("q_binomial ratio form equals Pascal recurrence", "[qcore]") {
    const double q = 0.5;
    CHECK(q_binomial(5, 0, q) == 1.0);
    CHECK(q_binomial(2, 1, q) == Approx(1.5).epsilon(1e-15));

    // oracle: [n,k]_q = [n-1,k-1]_q + q^k [n-1,k]_q
    double pascal[9][9] = {};
    for (int n = 0; n <= 8; ++n) {
        pascal[n][0] = 1.0;
        pascal[n][n] = 1.0;
        for (int k = 1; k < n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + std::pow(q, k) * pascal[n - 1][k];
    }
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k, q) == Approx(pascal[n][k]).epsilon(1e-14));

    CHECK(q_binomial(4, 2, q) == Approx(2.1875).epsilon(1e-14));
    CHECK_THROWS_AS(q_binomial(3, 4, q), domain_error);
}

TEST_CASE("q_binomial symmetry is exact", "[qcore]") {
    for (double q : {0.3, 0.5, 0.9})
        for (int n = 0; n <= 10; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(q_binomial(n, k, q) == q_binomial(n, n - k, q));
}

TEST_CASE("e_q series oracle and domain", "[qcore]") {
    const double q = 0.5;
    CHECK(e_q(0.0, q).value == 1.0);

    // oracle: sum z^n / [n]_q! until the term drops below 1e-15
    const double z = 1.0;
    double series = 0.0, term = 1.0;
    for (int n = 0; std::abs(term) > 1e-15; ++n) {
        series += term;
        term *= z / q_number(n + 1.0, q);
    }
    Truncation t;
    t.tol = 1e-12;
    CHECK(e_q(z, q, t).value == Approx(series).epsilon(1e-12));

    CHECK_THROWS_AS(e_q(2.0, 0.5, t), domain_error);  // 1/(1-q) = 2
    CHECK_THROWS_AS(e_q(-2.0, 0.5, t), domain_error);
}

TEST_CASE("E_q product matches its theta-like series", "[qcore]") {
    const double q = 0.5;
    CHECK(E_q(0.0, q).value == 1.0);

    const double z = 1.0;
    double series = 0.0;
    for (int n = 0; n < 60; ++n)
        series += std::pow(q, 0.5 * n * (n - 1.0)) * std::pow(z, n) / q_factorial(n, q);
    CHECK(E_q(z, q).value == Approx(series).epsilon(1e-12));
}

TEST_CASE("exponential duality e_q(z) E_q(-z) = 1", "[qcore]") {
    for (double q : {0.3, 0.5, 0.8}) {
        const double radius = 1.0 / (1.0 - q);
        for (double frac : {-0.9, -0.5, 0.0, 0.4, 0.95}) {
            const double z = frac * radius;
            CHECK(e_q(z, q).value * E_q(-z, q).value == Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("gen_power basics", "[qcore]") {
    QContext ctx(0.5, 1.0);
    CHECK(gen_power(2.0, 0.0, 0.37, ctx).value == Approx(std::pow(2.0, 0.37)).epsilon(1e-15));
    CHECK(gen_power(2.0, 0.7, 1.0, ctx).value == Approx(2.0 - 0.7).epsilon(1e-15));
    // telescoping with Q = q^(p+1) = 0.25: (2 - 1)(2 - 1*0.25)
    CHECK(gen_power(2.0, 1.0, 2.0, ctx).value == Approx((2.0 - 1.0) * (2.0 - 0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(gen_power(-1.0, 0.5, 1.0, ctx), domain_error);
    CHECK_THROWS_AS(gen_power(1.0, -0.5, 1.0, ctx), domain_error);
}

TEST_CASE("gen_power fractional route against 400-factor product", "[qcore]") {
    QContext ctx(0.5, 0.0);
    const double x = 1.0, y = 0.3, alpha = 0.5;
    const double Q = ctx.big_q();
    const double r = y / x;
    double oracle = 1.0;
    for (int k = 0; k < 400; ++k)
        oracle *= (1.0 - r * std::pow(Q, k)) / (1.0 - r * std::pow(Q, k + alpha));
    oracle *= std::pow(x, alpha);
    EvalResult g = gen_power(x, y, alpha, ctx);
    CHECK(g.converged);
    CHECK(g.value == Approx(oracle).epsilon(1e-13));
}

TEST_CASE("gen_power integer telescoping matches the infinite-ratio route", "[qcore]") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> ux(0.2, 3.0);
    std::uniform_real_distribution<double> ufrac(0.05, 0.95);
    std::uniform_real_distribution<double> uq(0.2, 0.9);
    std::uniform_real_distribution<double> up(-0.5, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = ux(rng);
        const double y = x * ufrac(rng);
        const int n = 1 + static_cast<int>(rng() % 6);
        QContext ctx(uq(rng), up(rng));
        const double Q = ctx.big_q();
        // infinite-ratio form evaluated longhand
        const double r = y / x;
        double ratio = 1.0;
        for (int k = 0; k < 600; ++k)
            ratio *= (1.0 - r * std::pow(Q, k)) / (1.0 - r * std::pow(Q, k + n));
        ratio *= std::pow(x, n);
        const double telescoped = gen_power(x, y, n, ctx).value;
        CHECK(telescoped == Approx(ratio).epsilon(1e-12));
    }
}

TEST_CASE("gen_power at p=0 equals the base-q power from Pochhammer ratios", "[qcore]") {
    const double q = 0.6;
    QContext ctx(q, 0.0);
    for (double alpha : {0.3, 0.8, 1.9}) {
        for (double r : {0.1, 0.45, 0.9}) {
            const double via_poch = q_pochhammer_inf(r, q).value /
                                    q_pochhammer_inf(std::pow(q, alpha) * r, q).value;
            CHECK(gen_power(1.0, r, alpha, ctx).value == Approx(via_poch).epsilon(1e-12));
        }
    }
}

TEST_CASE("gen_power exact zeros on the Q-grid", "[qcore]") {
    QContext ctx(0.5, 1.0);
    // y = x: the k = 0 factor vanishes
    CHECK(gen_power(1.0, 1.0, 0.5, ctx).value == 0.0);
    // y/x = Q^-2: the k = 2 factor vanishes
    const double Q = ctx.big_q();
    CHECK(gen_power(1.0, 1.0 / (Q * Q), 0.5, ctx).value == 0.0);
}

TEST_CASE("bracket_exponent closed form", "[qcore]") {
    QContext ctx(0.5, 1.0);
    CHECK(bracket_exponent(0.0, ctx) == Approx(1.0).epsilon(1e-14));
    CHECK(bracket_exponent(1.0, ctx) == Approx(ctx.bracket_p1()).epsilon(1e-13));
    QContext p0(0.37, 0.0);
    for (double alpha : {0.3, 1.4, 2.2})
        CHECK(bracket_exponent(alpha, p0) == Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(bracket_exponent(-1.0, ctx), domain_error);
}

TEST_CASE("bracket_exponent equals its defining infinite product", "[qcore]") {
    for (double q : {0.3, 0.5}) {
        for (double alpha : {0.3, 1.0, 2.5}) {
            for (double p : {0.5, 1.0, 3.0}) {
                QContext ctx(q, p);
                double prod = 1.0;
                for (int k = 1; k <= 400; ++k) {
                    const double qk = std::pow(q, k);
                    const double qka = std::pow(q, k + alpha);
                    prod *= q_number(p + 1.0, qk) / q_number(p + 1.0, qka);
                }
                CHECK(bracket_exponent(alpha, ctx) == Approx(prod).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("q_gamma special values and recurrence", "[qcore]") {
    CHECK(q_gamma(1.0, 0.5).value == Approx(1.0).epsilon(1e-14));
    CHECK(q_gamma(2.0, 0.5).value == Approx(1.0).epsilon(1e-14));
    CHECK(q_gamma(3.0, 0.5).value == Approx(1.5).epsilon(1e-13));
    CHECK_THROWS_AS(q_gamma(0.0, 0.5), domain_error);
    CHECK_THROWS_AS(q_gamma(-1.5, 0.5), domain_error);

    for (double q : {0.1, 0.5, 0.9})
        for (int i = 1; i <= 50; ++i) {
            const double t = i / 10.0;
            const double lhs = q_gamma(t + 1.0, q).value;
            const double rhs = q_number(t, q) * q_gamma(t, q).value;
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
        }
}

TEST_CASE("q_gamma product form vs Jackson-integral definition", "[qcore]") {
    for (double q : {0.4, 0.5, 0.7}) {
        for (double t : {0.5, 1.3, 2.0}) {
            Integrand ig([=](double w) { return std::pow(w, t - 1.0) * E_q(-q * w, q).value; },
                         "x^(t-1) E_q(-qx)");
            const double integral = jackson_integral(ig, 1.0 / (1.0 - q), q).value;
            CHECK(q_gamma(t, q).value == Approx(integral).epsilon(1e-8));
        }
    }
}

TEST_CASE("q_beta values and Jackson cross-check", "[qcore]") {
    CHECK(q_beta(1.0, 1.0, 0.5).value == Approx(1.0).epsilon(1e-13));
    CHECK(q_beta(2.0, 1.0, 0.5).value == Approx(1.0 / 1.5).epsilon(1e-13));
    CHECK_THROWS_AS(q_beta(0.0, 1.0, 0.5), domain_error);

    const double q = 0.5;
    QContext ctx(q, 0.0);
    const double t = 0.5, s = 0.5;
    Integrand ig([&](double w) {
        return std::pow(w, t - 1.0) * gen_power(1.0, q * w, s - 1.0, ctx).value;
    }, "beta integrand");
    const double integral = jackson_integral(ig, 1.0, q).value;
    CHECK(q_beta(t, s, q).value == Approx(integral).epsilon(1e-8));
}

TEST_CASE("deterministic evaluation", "[qcore]") {
    QContext ctx(0.7, 0.3);
    const double a = gen_power(1.3, 0.9, 0.71, ctx).value;
    const double b = gen_power(1.3, 0.9, 0.71, ctx).value;
    CHECK(a == b);
    CHECK(q_gamma(0.77, 0.9).value == q_gamma(0.77, 0.9).value);
    CHECK(e_q(0.3, 0.5).value == e_q(0.3, 0.5).value);
}

TEST_CASE("truncation validation", "[qcore]") {
    Truncation bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(q_pochhammer_inf(0.5, 0.5, bad), domain_error);
    bad.tol = 1e-12;
    bad.max_terms = 0;
    CHECK_THROWS_AS(q_pochhammer_inf(0.5, 0.5, bad), domain_error);
    CHECK_THROWS_AS(QContext(1.2, 0.0), domain_error);
    CHECK_THROWS_AS(QContext(0.5, -1.0), domain_error);
}
