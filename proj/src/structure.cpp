#include "wshift/detail/structure.hpp"

#include <stdexcept>

namespace wshift::detail {

TailStructure tail_structure(const WeightSequence& seq) {
  const auto& m = seq.model();
  if (const auto* p = std::get_if<Periodic>(&m)) {
    return {p->pattern, p->pattern, 0, 0};
  }
  if (const auto* mp = std::get_if<ModifiedPeriodic>(&m)) {
    if (mp->overrides.empty()) return {mp->base.pattern, mp->base.pattern, 0, 0};
    return {mp->base.pattern, mp->base.pattern, mp->overrides.begin()->first, mp->overrides.rbegin()->first + 1};
  }
  if (const auto* s = std::get_if<SplitPeriodic>(&m)) {
    return {s->left.pattern, s->right.pattern, s->split_index, s->split_index};
  }
  const auto& s = std::get<Sampled>(m);
  return {{s.left_extension}, {s.right_extension}, s.k_min, s.k_max() + 1};
}

double log_period_product(const std::vector<Complex>& pattern) {
  CompensatedSum sum;
  for (const auto& w : pattern) sum.add(std::log(std::abs(w)));
  return sum.value();
}

double log_period_scale(const std::vector<Complex>& pattern) {
  double s = 0.0;
  for (const auto& w : pattern) s += std::abs(std::log(std::abs(w)));
  return s;
}

LogWalk::LogWalk(const WeightSequence& seq, double log_c, Index first_, Index last_) : first(first_) {
  if (last_ < first_) throw std::invalid_argument("LogWalk: empty range");
  values.reserve(static_cast<std::size_t>(last_ - first_ + 1));
  CompensatedSum sum;
  values.push_back(0.0);
  for (Index m = first_ + 1; m <= last_; ++m) {
    sum.add(log_c);
    sum.add(std::log(std::abs(seq.at(m))));
    values.push_back(sum.value());
  }
}

}  // namespace wshift::detail
