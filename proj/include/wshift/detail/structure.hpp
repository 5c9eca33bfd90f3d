#pragma once

#include <cmath>
#include <vector>

#include "wshift/weights.hpp"

namespace wshift::detail {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Every supported sequence is periodic to the left of `core_begin` and
/// periodic to the right of `core_end - 1`. Sampled tables fit the same shape
/// with period-1 tails.
struct TailStructure {
  std::vector<Complex> left_pattern;
  std::vector<Complex> right_pattern;
  Index core_begin = 0;
  Index core_end = 0;

  Index left_period() const { return static_cast<Index>(left_pattern.size()); }
  Index right_period() const { return static_cast<Index>(right_pattern.size()); }
};

TailStructure tail_structure(const WeightSequence& seq);

/// Sum of log|w| over one period of a pattern.
double log_period_product(const std::vector<Complex>& pattern);

/// Sum of |log|w|| over one period; the scale for zero-drift decisions.
double log_period_scale(const std::vector<Complex>& pattern);

/// F(first) = 0 and F(m) - F(m-1) = log c + log|w_m|, so a window (k, n)
/// has log value F(k+n) - F(k).
struct LogWalk {
  Index first = 0;
  std::vector<double> values;

  LogWalk(const WeightSequence& seq, double log_c, Index first, Index last);

  double operator()(Index m) const { return values[static_cast<std::size_t>(m - first)]; }
  Index last() const { return first + static_cast<Index>(values.size()) - 1; }
};

}  // namespace wshift::detail
