#pragma once

#include <cmath>
#include <limits>

namespace gabor {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Accumulates log(sum exp(x_i)) without leaving the log domain, so sums of
/// terms far below the smallest double stay representable.
class LogSum {
 public:
  void add_log(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (log_term <= max_) {
      scaled_.add(std::exp(log_term - max_));
      return;
    }
    // Rescale what we have to the new maximum.
    const double factor = std::exp(max_ - log_term);
    CompensatedSum rescaled;
    rescaled.add(scaled_.value() * factor);
    rescaled.add(1.0);
    scaled_ = rescaled;
    max_ = log_term;
  }

  double log_value() const {
    if (max_ == -std::numeric_limits<double>::infinity()) return max_;
    return max_ + std::log(scaled_.value());
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  CompensatedSum scaled_;
};

}  // namespace gabor
