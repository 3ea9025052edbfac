// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qfrac {

/// Lower bound used instead of |value| in relative-tolerance tests, so that
/// results converging to zero can still be declared converged.
inline constexpr double floor_scale = 1e-300;

/// Truncation policy for infinite series and products.
///
/// Every truncated evaluation either meets `tol` (relative to the magnitude
/// of the result, floored at `floor_scale`) or reports non-convergence via
/// EvalResult::converged.
struct Truncation {
    double tol = 1e-12;      ///< relative tail tolerance
    long max_terms = 10000;  ///< hard cap on series/product terms
};

/// Value of a truncated evaluation together with its diagnostics.
struct EvalResult {
    double value = 0.0;
    long terms_used = 0;
    double est_tail = 0.0;  ///< estimated absolute tail error
    bool converged = false;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A truncated evaluation hit its term cap before meeting tolerance, in a
/// context that cannot return the EvalResult diagnostics.
class convergence_error : public std::runtime_error {
  public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

inline void check_truncation(const Truncation& trunc) {
    if (!(trunc.tol > 0.0))
        throw domain_error("Truncation: tol must be positive");
    if (trunc.max_terms < 1)
        throw domain_error("Truncation: max_terms must be at least 1");
}

}  // namespace qfrac
