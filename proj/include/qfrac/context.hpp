// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "qfrac/truncation.hpp"

namespace qfrac {

/// Parameter pair (q, p) governing every operator evaluation.
///
/// q is the deformation parameter, restricted to the open real interval
/// (0,1). p > -1 deforms the integration measure to w^p d_q w; p = 0
/// recovers the plain Jackson measure. The derived base Q = q^(p+1) is the
/// grid ratio of every generalized power the operators use.
struct QContext {
    double q;
    double p;

    QContext(double q_, double p_) : q(q_), p(p_) {
        if (!(q > 0.0) || !(q < 1.0))
            throw domain_error("QContext: q must lie in (0,1)");
        if (!(p > -1.0))
            throw domain_error("QContext: p must be greater than -1");
    }

    /// The base Q = q^(p+1) in (0,1).
    double big_q() const { return std::pow(q, p + 1.0); }

    /// [p+1]_q = (1 - q^(p+1)) / (1 - q), positive for p > -1.
    double bracket_p1() const { return (1.0 - big_q()) / (1.0 - q); }
};

}  // namespace qfrac
