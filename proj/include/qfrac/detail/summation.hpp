// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace qfrac::detail {

// Neumaier variant of compensated summation. Adding terms in index order
// keeps results bit-identical run to run.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Envelope of the last K term magnitudes; the geometric tail bound of a
// Jackson sum is envelope * q/(1-q).
template <int K = 8>
class TermEnvelope {
  public:
    void push(double magnitude) {
        ring_[count_ % K] = magnitude;
        ++count_;
    }

    bool full() const { return count_ >= K; }

    double max() const {
        double m = 0.0;
        const long n = count_ < K ? count_ : K;
        for (long i = 0; i < n; ++i)
            m = ring_[i] > m ? ring_[i] : m;
        return m;
    }

  private:
    double ring_[K] = {};
    long count_ = 0;
};

}  // namespace qfrac::detail
