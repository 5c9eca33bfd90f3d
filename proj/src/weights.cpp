#include "wshift/weights.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wshift {

namespace {

constexpr double kModulusTolerance = 1e-12;

Index floor_mod(Index k, Index p) {
  const Index r = k % p;
  return r < 0 ? r + p : r;
}

Complex periodic_at(const Periodic& p, Index k) {
  return p.pattern[static_cast<std::size_t>(floor_mod(k, static_cast<Index>(p.pattern.size())))];
}

void require_nonzero(const Complex& w, const char* where) {
  if (!(std::abs(w) > 0.0) || !std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw InvalidSequence(std::string(where) + ": weights must be finite and nonzero");
  }
}

void validate_pattern(const Periodic& p, const char* where) {
  if (p.pattern.empty()) throw InvalidSequence(std::string(where) + ": empty pattern");
  for (const auto& w : p.pattern) require_nonzero(w, where);
}

bool all_close(const std::vector<double>& moduli) {
  if (moduli.empty()) return true;
  const auto [lo, hi] = std::minmax_element(moduli.begin(), moduli.end());
  return *hi - *lo <= kModulusTolerance * *hi;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

WeightSequence::WeightSequence(Model model) : model_(std::move(model)) {
  std::visit(Overloaded{
                 [](const Periodic& p) { validate_pattern(p, "periodic"); },
                 [](const ModifiedPeriodic& m) {
                   validate_pattern(m.base, "modified");
                   for (const auto& [k, w] : m.overrides) require_nonzero(w, "modified override");
                 },
                 [](const SplitPeriodic& s) {
                   validate_pattern(s.left, "split (left)");
                   validate_pattern(s.right, "split (right)");
                 },
                 [](const Sampled& s) {
                   if (s.values.empty()) throw InvalidSequence("sampled: empty table");
                   for (const auto& w : s.values) require_nonzero(w, "sampled");
                   require_nonzero(s.left_extension, "sampled extension");
                   require_nonzero(s.right_extension, "sampled extension");
                 },
             },
             model_);
}

WeightSequence WeightSequence::periodic(std::vector<Complex> pattern) {
  return WeightSequence(Periodic{std::move(pattern)});
}

WeightSequence WeightSequence::modified(std::vector<Complex> base, std::map<Index, Complex> overrides) {
  return WeightSequence(ModifiedPeriodic{Periodic{std::move(base)}, std::move(overrides)});
}

WeightSequence WeightSequence::split(std::vector<Complex> left, std::vector<Complex> right, Index split_index) {
  return WeightSequence(SplitPeriodic{Periodic{std::move(left)}, Periodic{std::move(right)}, split_index});
}

WeightSequence WeightSequence::sampled(Index k_min, std::vector<Complex> values, Complex left_extension,
                                       Complex right_extension) {
  return WeightSequence(Sampled{k_min, std::move(values), left_extension, right_extension});
}

Complex WeightSequence::at(Index k) const {
  return std::visit(Overloaded{
                        [k](const Periodic& p) { return periodic_at(p, k); },
                        [k](const ModifiedPeriodic& m) {
                          const auto it = m.overrides.find(k);
                          return it != m.overrides.end() ? it->second : periodic_at(m.base, k);
                        },
                        [k](const SplitPeriodic& s) {
                          return k < s.split_index ? periodic_at(s.left, k) : periodic_at(s.right, k);
                        },
                        [k](const Sampled& s) {
                          if (k < s.k_min) return s.left_extension;
                          if (k > s.k_max()) return s.right_extension;
                          return s.values[static_cast<std::size_t>(k - s.k_min)];
                        },
                    },
                    model_);
}

WeightSequence WeightSequence::scaled(Complex factor) const {
  require_nonzero(factor, "scale factor");
  auto scale = [factor](std::vector<Complex> v) {
    for (auto& w : v) w *= factor;
    return v;
  };
  return std::visit(Overloaded{
                        [&](const Periodic& p) { return periodic(scale(p.pattern)); },
                        [&](const ModifiedPeriodic& m) {
                          auto overrides = m.overrides;
                          for (auto& [k, w] : overrides) w *= factor;
                          return modified(scale(m.base.pattern), std::move(overrides));
                        },
                        [&](const SplitPeriodic& s) {
                          return split(scale(s.left.pattern), scale(s.right.pattern), s.split_index);
                        },
                        [&](const Sampled& s) {
                          return sampled(s.k_min, scale(s.values), s.left_extension * factor,
                                         s.right_extension * factor);
                        },
                    },
                    model_);
}

Complex weight_at(const WeightSequence& seq, Index k) { return seq.at(k); }

std::vector<double> occurring_moduli(const WeightSequence& seq) {
  std::vector<double> out;
  auto add = [&out](const std::vector<Complex>& v) {
    for (const auto& w : v) out.push_back(std::abs(w));
  };
  std::visit(Overloaded{
                 [&](const Periodic& p) { add(p.pattern); },
                 [&](const ModifiedPeriodic& m) {
                   // A base entry whose every occurrence is overridden is impossible:
                   // overrides are finite, the residue class is not.
                   add(m.base.pattern);
                   for (const auto& [k, w] : m.overrides) out.push_back(std::abs(w));
                 },
                 [&](const SplitPeriodic& s) {
                   add(s.left.pattern);
                   add(s.right.pattern);
                 },
                 [&](const Sampled& s) {
                   add(s.values);
                   out.push_back(std::abs(s.left_extension));
                   out.push_back(std::abs(s.right_extension));
                 },
             },
             seq.model());
  return out;
}

bool is_bounded(const WeightSequence& seq) {
  const auto moduli = occurring_moduli(seq);
  return std::all_of(moduli.begin(), moduli.end(), [](double m) { return std::isfinite(m); });
}

bool is_normal_shift(const WeightSequence& seq) { return all_close(occurring_moduli(seq)); }

}  // namespace wshift
