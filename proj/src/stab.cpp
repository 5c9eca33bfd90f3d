#include "wshift/stab.hpp"

#include <cmath>
#include <stdexcept>

#include "wshift/detail/structure.hpp"
#include "wshift/similarity.hpp"
#include "wshift/window.hpp"

namespace wshift {

namespace {

// Sampled heuristic: the profile ends below 1e-6 of its start and its last
// half never increases.
bool looks_decaying(const std::vector<double>& profile) {
  if (profile.size() < 2) return false;
  const std::size_t half = profile.size() / 2;
  for (std::size_t i = half + 1; i < profile.size(); ++i) {
    if (profile[i] > profile[i - 1]) return false;
  }
  return profile.back() < 1e-6 * profile.front();
}

}  // namespace

const char* to_string(StabVerdict verdict) {
  switch (verdict) {
    case StabVerdict::Zero: return "zero";
    case StabVerdict::Dense: return "dense";
    case StabVerdict::MixedViolation: return "mixed-violation";
  }
  return "?";
}

bool stab_normal_diag(const std::vector<Complex>& lambdas, const std::vector<Complex>& x) {
  if (lambdas.size() != x.size()) throw std::invalid_argument("stab_normal_diag: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(lambdas[i]) >= 1.0 && x[i] != Complex(0.0, 0.0)) return false;
  }
  return true;
}

std::vector<double> basis_decay_profile(const WeightSequence& seq, Index k, Index horizon) {
  if (horizon < 1) throw std::invalid_argument("basis_decay_profile: horizon must be >= 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(horizon));
  detail::CompensatedSum sum;
  for (Index n = 1; n <= horizon; ++n) {
    sum.add(std::log(std::abs(seq.at(k + n - 1))));
    out.push_back(std::exp(sum.value()));
  }
  return out;
}

StabReport dichotomy_check(const WeightSequence& seq, Index k_range, Index horizon) {
  if (k_range < 0) throw std::invalid_argument("dichotomy_check: k_range must be >= 0");
  StabReport out;
  out.rigorous = seq.is_exact();
  if (seq.is_exact()) {
    // ||S_w^n e_k|| eventually runs along the right tail. A rate below 1 gives
    // geometric decay; a rate of 1 keeps the products bounded below by the
    // periodic-tail argument, so no decay; above 1 they grow.
    const auto t = detail::tail_structure(seq);
    const double log_rate = detail::log_period_product(t.right_pattern) / static_cast<double>(t.right_period());
    const double scale = std::max(1.0, detail::log_period_scale(t.right_pattern));
    const bool decays = log_rate < -kRateTolerance * scale;
    for (Index k = -k_range; k <= k_range; ++k) {
      out.per_basis_decay[k] = decays;
      out.rates[k] = std::exp(log_rate);
    }
  } else {
    if (horizon < 2) throw std::invalid_argument("dichotomy_check: horizon must be >= 2");
    for (Index k = -k_range; k <= k_range; ++k) {
      const auto profile = basis_decay_profile(seq, k, horizon);
      out.per_basis_decay[k] = looks_decaying(profile);
      const std::size_t half = profile.size() / 2;
      out.rates[k] = std::pow(profile.back() / profile[half - 1],
                              1.0 / static_cast<double>(profile.size() - half));
    }
  }
  bool any = false;
  bool all = true;
  for (const auto& [k, d] : out.per_basis_decay) {
    any = any || d;
    all = all && d;
  }
  out.verdict = all ? StabVerdict::Dense : (any ? StabVerdict::MixedViolation : StabVerdict::Zero);
  return out;
}

bool stab_similarity_consistency(const WeightSequence& seq) {
  const auto verdict = decide_similarity(seq);
  const auto* similar = std::get_if<Similar>(&verdict);
  if (similar == nullptr) throw std::invalid_argument("stab_similarity_consistency: sequence is not similar");
  const double c = similar->c;
  for (const double r : {c / 2.0, c, 2.0 * c}) {
    const StabReport report = dichotomy_check(seq.scaled(r), 8, 1);
    const StabVerdict expected = r < c ? StabVerdict::Dense : StabVerdict::Zero;
    if (report.verdict != expected) return false;
  }
  return true;
}

}  // namespace wshift
