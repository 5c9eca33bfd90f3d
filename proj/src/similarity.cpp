#include "wshift/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wshift/detail/structure.hpp"
#include "wshift/finmodel.hpp"

namespace wshift {

namespace {

using detail::CompensatedSum;

// d_k in closed form: log-modulus and phase accumulated from 0.
Complex diagonal_entry(const WeightSequence& seq, double log_c, Index k) {
  CompensatedSum log_mod;
  CompensatedSum phase;
  if (k > 0) {
    for (Index j = 0; j < k; ++j) {
      const Complex w = seq.at(j);
      log_mod.add(-log_c);
      log_mod.add(-std::log(std::abs(w)));
      phase.add(-std::arg(w));
    }
  } else {
    for (Index j = k; j < 0; ++j) {
      const Complex w = seq.at(j);
      log_mod.add(log_c);
      log_mod.add(std::log(std::abs(w)));
      phase.add(std::arg(w));
    }
  }
  return std::polar(std::exp(log_mod.value()), phase.value());
}

NotSimilar refutation(const WindowStats& stats, RefutationReason reason, TailRates rates) {
  NotSimilar out;
  out.reason = reason;
  out.witness_c = stats.c;
  out.rates = rates;
  out.escapes_upward = !stats.bounded_above();
  out.witness = out.escapes_upward ? stats.sup_escape : stats.inf_escape;
  return out;
}

}  // namespace

const char* to_string(RefutationReason reason) {
  return reason == RefutationReason::RateMismatch ? "rate-mismatch" : "window-escape";
}

SimilarityVerdict decide_similarity(const WeightSequence& seq, Index horizon) {
  if (!seq.is_exact()) {
    // The extensions of a sampled table are exact constants, so a modulus
    // mismatch between them is a genuine refutation.
    const TailRates rates = tail_rates(seq);
    const WindowStats stats = scaled_window_stats(seq, 1.0 / rates.right, horizon);
    if (!stats.condition_holds()) return refutation(stats, RefutationReason::RateMismatch, rates);
    return Undecided{horizon, stats};
  }

  const CandidateC cand = candidate_c(seq);
  if (!cand.feasible()) {
    // At the right tail's constant the left tail escapes.
    const WindowStats stats = scaled_window_stats(seq, 1.0 / cand.rates.right);
    return refutation(stats, RefutationReason::RateMismatch, cand.rates);
  }
  const WindowStats stats = scaled_window_stats(seq, *cand.c);
  if (!stats.condition_holds()) return refutation(stats, RefutationReason::WindowEscape, cand.rates);

  DiagonalSimilarity diag = build_similarity(seq, *cand.c);
  const double kappa = diag.condition_number();
  return Similar{*cand.c, kappa, std::move(diag)};
}

DiagonalSimilarity build_similarity(const WeightSequence& seq, double c) {
  if (!seq.is_exact()) throw std::invalid_argument("build_similarity: requires an exact sequence kind");
  const CandidateC cand = candidate_c(seq);
  if (!cand.feasible()) throw std::invalid_argument("build_similarity: sequence is not similar to a normal operator");
  if (!(c > 0.0) || std::abs(c - *cand.c) > kRateTolerance * *cand.c) {
    throw std::invalid_argument("build_similarity: c is not the feasible scaling constant");
  }
  const double log_c = std::log(c);

  // log|d_k| = F(-1) - F(k-1) for the walk F of log(c |w|). With balanced
  // periodic tails the extremes of F lie in the scanned range.
  const auto t = detail::tail_structure(seq);
  const Index lo = std::min<Index>(t.core_begin - 3 * t.left_period() - 1, -2);
  const Index hi = std::max<Index>(t.core_end + 3 * t.right_period(), 1);
  const detail::LogWalk walk(seq, log_c, lo, hi);
  const auto [min_it, max_it] = std::minmax_element(walk.values.begin(), walk.values.end());
  const double anchor = walk(-1);

  DiagonalSimilarity out;
  out.c = c;
  out.sup_mod = std::exp(anchor - *min_it);
  out.inf_mod = std::exp(anchor - *max_it);
  out.generator = [seq, log_c](Index k) { return diagonal_entry(seq, log_c, k); };
  return out;
}

double verify_similarity(const WeightSequence& seq, const DiagonalSimilarity& diag, Index N) {
  if (N < 4) throw std::invalid_argument("verify_similarity: N must be >= 4");
  if (2 * N + 1 > kMaxModelDim) throw std::invalid_argument("verify_similarity: dimension mismatch (N too large)");
  if (!diag.generator) throw std::invalid_argument("verify_similarity: empty diagonal");
  const Index dim = 2 * N + 1;
  const Matrix sw = FiniteModel::truncation(seq, N).entries();
  const Matrix s = FiniteModel::truncation(WeightSequence::periodic({1.0}), N).entries();
  Vector d(dim);
  for (Index k = -N; k <= N; ++k) d(k + N) = diag(k);
  const Matrix x = d.asDiagonal();
  const Matrix residual = x * sw - (1.0 / diag.c) * (s * x);
  return operator_norm(Matrix(residual.leftCols(dim - 1))).value;
}

}  // namespace wshift
