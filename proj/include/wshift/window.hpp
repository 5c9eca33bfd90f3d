#pragma once

#include <optional>
#include <vector>

#include "wshift/weights.hpp"

namespace wshift {

/// A window (k, n) covers the weights w_{k+1}, ..., w_{k+n}.
struct WindowWitness {
  Index k = 0;
  Index n = 1;
  double value = 0.0;      // c^n * prod |w_{k+j}|
  double log_value = 0.0;  // its natural log; finite even when `value` is not
};

/// Extremes of the scaled window products c^n * P(k, n) over k in Z, n >= 1.
struct WindowStats {
  double c = 1.0;
  double sup_scaled = 0.0;  // +infinity when unbounded above
  double inf_scaled = 0.0;  // 0 when not bounded away from zero
  double log_sup = 0.0;
  double log_inf = 0.0;
  bool exact = true;
  Index horizon = 0;  // scan limit for |k| and n when !exact

  // Attaining windows for the finite bounds. In horizon mode these are the
  // extremes seen by the scan.
  std::optional<WindowWitness> sup_witness;
  std::optional<WindowWitness> inf_witness;

  // Three windows along one residue class with strictly increasing
  // (resp. decreasing) values; present exactly when the bound diverges.
  std::vector<WindowWitness> sup_escape;
  std::vector<WindowWitness> inf_escape;

  bool bounded_above() const { return sup_escape.empty(); }
  bool bounded_below() const { return inf_escape.empty(); }
  bool condition_holds() const { return bounded_above() && bounded_below(); }
};

/// Geometric means of |w| over one period of the left and right tails.
struct TailRates {
  double left = 1.0;
  double right = 1.0;
};

TailRates tail_rates(const WeightSequence& seq);

/// prod_{j=1}^{n} |w_{k+j}|, accumulated as a compensated sum of logs.
double window_product(const WeightSequence& seq, Index k, Index n);
double log_window_product(const WeightSequence& seq, Index k, Index n);

/// c^n * window_product(seq, k, n).
WindowWitness scaled_window(const WeightSequence& seq, double c, Index k, Index n);

/// Result of candidate_c: either the unique feasible constant, or an
/// infeasibility report carrying the mismatched tail rates.
struct CandidateC {
  std::optional<double> c;
  TailRates rates;

  bool feasible() const { return c.has_value(); }
};

/// Only exact kinds (throws std::invalid_argument for Sampled).
CandidateC candidate_c(const WeightSequence& seq);

/// Default scan limit for Sampled sequences.
inline constexpr Index kDefaultHorizon = 200;

WindowStats scaled_window_stats(const WeightSequence& seq, double c, Index horizon = kDefaultHorizon);

/// Relative tolerance under which two tail rates (or a per-period drift and
/// zero) are considered equal.
inline constexpr double kRateTolerance = 1e-12;

}  // namespace wshift
