#pragma once

#include <map>
#include <vector>

#include "wshift/weights.hpp"

namespace wshift {

/// Membership of x in the stable manifold of the diagonal normal matrix
/// diag(lambdas): every coefficient on an eigendirection with |lambda| >= 1
/// must vanish.
bool stab_normal_diag(const std::vector<Complex>& lambdas, const std::vector<Complex>& x);

/// (||S_w^n e_k||)_{n=1..horizon} = (prod_{j=0}^{n-1} |w_{k+j}|)_n.
std::vector<double> basis_decay_profile(const WeightSequence& seq, Index k, Index horizon);

enum class StabVerdict { Zero, Dense, MixedViolation };

struct StabReport {
  StabVerdict verdict = StabVerdict::Zero;
  std::map<Index, bool> per_basis_decay;
  std::map<Index, double> rates;  // asymptotic per-step rate seen from e_k
  bool rigorous = true;           // false for the Sampled horizon heuristic
};

/// Basis-vector form of the all-or-none property of Stab(S_w), for
/// k in [-k_range, k_range]. Exact kinds are judged by the right tail's
/// geometric-mean rate; Sampled by the profile up to `horizon`.
StabReport dichotomy_check(const WeightSequence& seq, Index k_range, Index horizon);

/// For the similarity constant c, checks that r * S_w has a dense stable
/// manifold exactly when r < c, for r in {c/2, c, 2c}. Throws
/// std::invalid_argument unless the sequence is similar to a normal operator.
bool stab_similarity_consistency(const WeightSequence& seq);

const char* to_string(StabVerdict verdict);

}  // namespace wshift
