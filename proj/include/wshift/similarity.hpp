#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "wshift/window.hpp"

namespace wshift {

/// Diagonal conjugator X = diag(d_k) with X S_w X^{-1} = (1/c) S, where
/// d_0 = 1 and d_{k+1} = d_k / (c w_k). Phases are absorbed, so the conjugated
/// shift has weights exactly 1/c.
struct DiagonalSimilarity {
  double c = 1.0;
  std::function<Complex(Index)> generator;
  double sup_mod = 1.0;  // sup_k |d_k|
  double inf_mod = 1.0;  // inf_k |d_k|

  Complex operator()(Index k) const { return generator(k); }
  double condition_number() const { return sup_mod / inf_mod; }
};

enum class RefutationReason { RateMismatch, WindowEscape };

struct Similar {
  double c = 1.0;
  double kappa = 1.0;
  DiagonalSimilarity diag;
};

struct NotSimilar {
  RefutationReason reason = RefutationReason::RateMismatch;
  double witness_c = 1.0;               // scaling used for the witness windows
  bool escapes_upward = true;           // sup diverges (else the inf reaches 0)
  std::vector<WindowWitness> witness;   // strictly monotone along a residue class
  TailRates rates;
};

struct Undecided {
  Index horizon = 0;
  WindowStats scan;  // horizon-mode statistics at the tails' common rate
};

using SimilarityVerdict = std::variant<Similar, NotSimilar, Undecided>;

/// Decide whether S_w is similar to a normal operator. Exact for the
/// periodic-type kinds; Sampled sequences are refuted only by a genuine tail
/// escape and are otherwise left Undecided.
SimilarityVerdict decide_similarity(const WeightSequence& seq, Index horizon = kDefaultHorizon);

/// The diagonal similarity for the sequence's (unique) feasible constant.
/// Throws std::invalid_argument when `c` is not that constant.
DiagonalSimilarity build_similarity(const WeightSequence& seq, double c);

/// Largest singular value of X S_w - (1/c) S X on the interior columns
/// -N..N-1 of the (2N+1)-dimensional truncation.
double verify_similarity(const WeightSequence& seq, const DiagonalSimilarity& diag, Index N);

const char* to_string(RefutationReason reason);

}  // namespace wshift
