#include "wshift/window.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wshift/detail/structure.hpp"

namespace wshift {

namespace {

using detail::CompensatedSum;
using detail::LogWalk;
using detail::TailStructure;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Sign of the per-period drift of log(c^n P) along a tail. Zero means the
/// drift is within kRateTolerance of the period's log scale.
struct Drift {
  int sign = 0;
  double per_period = 0.0;
};

Drift tail_drift(const std::vector<Complex>& pattern, double log_c) {
  const double p = static_cast<double>(pattern.size());
  const double delta = p * log_c + detail::log_period_product(pattern);
  const double scale = std::max(1.0, p * std::abs(log_c) + detail::log_period_scale(pattern));
  if (std::abs(delta) <= kRateTolerance * scale) return {0, delta};
  return {delta > 0 ? 1 : -1, delta};
}

// Windows (k, q*m*p) for q = 1, 2, 3 lying entirely in one tail. Their log
// values differ by exactly m*delta per step.
std::vector<WindowWitness> escape_windows(const WeightSequence& seq, double c, Index first_k, Index period,
                                          double delta, bool left_tail) {
  const double m_real = std::ceil(0.01 / std::abs(delta));
  const Index m = static_cast<Index>(std::clamp(m_real, 1.0, 1e5));
  std::vector<WindowWitness> out;
  for (Index q = 1; q <= 3; ++q) {
    const Index n = q * m * period;
    // Left-tail windows share their right end so they stay below the core.
    const Index k = left_tail ? first_k - n : first_k;
    out.push_back(scaled_window(seq, c, k, n));
  }
  return out;
}

}  // namespace

TailRates tail_rates(const WeightSequence& seq) {
  const TailStructure t = detail::tail_structure(seq);
  return {std::exp(detail::log_period_product(t.left_pattern) / static_cast<double>(t.left_period())),
          std::exp(detail::log_period_product(t.right_pattern) / static_cast<double>(t.right_period()))};
}

double log_window_product(const WeightSequence& seq, Index k, Index n) {
  if (n < 1) throw std::invalid_argument("window_product: n must be >= 1");
  CompensatedSum sum;
  for (Index j = 1; j <= n; ++j) {
    const double mod = std::abs(seq.at(k + j));
    if (!(mod > 0.0)) throw InvalidSequence("window_product: weight modulus underflowed to zero");
    sum.add(std::log(mod));
  }
  return sum.value();
}

double window_product(const WeightSequence& seq, Index k, Index n) {
  return std::exp(log_window_product(seq, k, n));
}

WindowWitness scaled_window(const WeightSequence& seq, double c, Index k, Index n) {
  if (!(c > 0.0)) throw std::invalid_argument("scaled_window: c must be positive");
  const double log_value = static_cast<double>(n) * std::log(c) + log_window_product(seq, k, n);
  return {k, n, std::exp(log_value), log_value};
}

CandidateC candidate_c(const WeightSequence& seq) {
  if (!seq.is_exact()) throw std::invalid_argument("candidate_c: requires an exact sequence kind");
  const TailRates rates = tail_rates(seq);
  if (std::abs(rates.left - rates.right) > kRateTolerance * std::max(rates.left, rates.right)) {
    return {std::nullopt, rates};
  }
  return {1.0 / rates.right, rates};
}

WindowStats scaled_window_stats(const WeightSequence& seq, double c, Index horizon) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("scaled_window_stats: c must be positive");
  if (horizon < 1) throw std::invalid_argument("scaled_window_stats: horizon must be >= 1");
  const double log_c = std::log(c);
  const TailStructure t = detail::tail_structure(seq);
  const Index pl = t.left_period();
  const Index pr = t.right_period();

  WindowStats out;
  out.c = c;
  out.exact = seq.is_exact();
  out.horizon = out.exact ? 0 : horizon;

  const Drift left = tail_drift(t.left_pattern, log_c);
  const Drift right = tail_drift(t.right_pattern, log_c);

  // Divergence comes only from the tails: a positive drift on the right
  // (l -> +inf) or on the left (k -> -inf) makes the sup infinite, and
  // symmetrically for the inf.
  auto add_escape = [&](const Drift& d, bool left_tail) {
    if (d.sign == 0) return;
    auto windows = left_tail ? escape_windows(seq, c, t.core_begin - 1, pl, d.per_period, true)
                             : escape_windows(seq, c, t.core_end - 1, pr, d.per_period, false);
    auto& target = d.sign > 0 ? out.sup_escape : out.inf_escape;
    if (target.empty()) target = std::move(windows);
  };
  add_escape(right, false);
  add_escape(left, true);

  // Finite extremes. With non-divergent tails every pair (k, l = k + n) can be
  // slid into [core_begin - 3 pl - 1, core_end + 3 pr] without decreasing
  // (resp. increasing) F(l) - F(k), so scanning that range is exact.
  Index lo;
  Index hi;
  Index max_n;
  if (out.exact) {
    lo = t.core_begin - 3 * pl - 1;
    hi = t.core_end + 3 * pr;
    max_n = hi - lo;
  } else {
    lo = -horizon;
    hi = 2 * horizon;
    max_n = horizon;
  }
  const LogWalk walk(seq, log_c, lo, hi);

  double best_sup = -kInf;
  double best_inf = kInf;
  WindowWitness sup_w;
  WindowWitness inf_w;
  if (out.exact) {
    Index argmin = lo;
    Index argmax = lo;
    for (Index l = lo + 1; l <= hi; ++l) {
      const double up = walk(l) - walk(argmin);
      if (up > best_sup) {
        best_sup = up;
        sup_w = {argmin, l - argmin, 0.0, up};
      }
      const double down = walk(l) - walk(argmax);
      if (down < best_inf) {
        best_inf = down;
        inf_w = {argmax, l - argmax, 0.0, down};
      }
      if (walk(l) < walk(argmin)) argmin = l;
      if (walk(l) > walk(argmax)) argmax = l;
    }
  } else {
    for (Index k = -horizon; k <= horizon; ++k) {
      for (Index n = 1; n <= max_n; ++n) {
        const double v = walk(k + n) - walk(k);
        if (v > best_sup) {
          best_sup = v;
          sup_w = {k, n, 0.0, v};
        }
        if (v < best_inf) {
          best_inf = v;
          inf_w = {k, n, 0.0, v};
        }
      }
    }
  }
  sup_w.value = std::exp(sup_w.log_value);
  inf_w.value = std::exp(inf_w.log_value);

  if (out.bounded_above() || !out.exact) out.sup_witness = sup_w;
  if (out.bounded_below() || !out.exact) out.inf_witness = inf_w;

  if (out.bounded_above()) {
    out.log_sup = best_sup;
    out.sup_scaled = sup_w.value;
  } else {
    out.log_sup = kInf;
    out.sup_scaled = kInf;
  }
  if (out.bounded_below()) {
    out.log_inf = best_inf;
    out.inf_scaled = inf_w.value;
  } else {
    out.log_inf = -kInf;
    out.inf_scaled = 0.0;
  }
  return out;
}

}  // namespace wshift
