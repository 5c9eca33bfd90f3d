#include <cmath>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "wshift/window.hpp"

using namespace wshift;
using wshift::testing::brute_windows;
using wshift::testing::rel_close;

namespace {

double direct_product(const WeightSequence& seq, Index k, Index n) {
  double p = 1.0;
  for (Index j = 1; j <= n; ++j) p *= std::abs(seq.at(k + j));
  return p;
}

}  // namespace

TEST_CASE("window_product examples") {
  CHECK(window_product(WeightSequence::periodic({1.0}), 0, 5) == doctest::Approx(1.0));

  const auto p12 = WeightSequence::periodic({1.0, 2.0});
  CHECK(direct_product(p12, 0, 2) == 2.0);
  CHECK(window_product(p12, 0, 2) == doctest::Approx(2.0).epsilon(1e-15));

  // w_{-2}, w_{-1} = 1 and w_0..w_3 = 2
  const auto split = WeightSequence::split({1.0}, {2.0}, 0);
  CHECK(direct_product(split, -3, 6) == 16.0);
  CHECK(window_product(split, -3, 6) == doctest::Approx(16.0).epsilon(1e-15));

  CHECK_THROWS_AS(window_product(p12, 0, 0), std::invalid_argument);
}

TEST_CASE("long windows do not overflow in the log domain") {
  const auto seq = WeightSequence::periodic({4.0});
  CHECK(log_window_product(seq, 0, 2000) == doctest::Approx(2000 * std::log(4.0)));
  CHECK(std::isinf(window_product(seq, 0, 2000)));
}

TEST_CASE("window products are multiplicative") {
  for (const auto& entry : testing::corpus()) {
    const auto seq = parse_sequence(entry.spec);
    for (Index k = -9; k <= 9; k += 3) {
      for (Index n = 1; n <= 13; n += 4) {
        for (Index m = 1; m <= 11; m += 5) {
          CHECK(rel_close(window_product(seq, k, n + m), window_product(seq, k, n) * window_product(seq, k + n, m),
                          1e-12));
        }
      }
    }
  }
}

TEST_CASE("candidate_c examples") {
  CHECK(*candidate_c(WeightSequence::periodic({1.0})).c == doctest::Approx(1.0));
  CHECK(*candidate_c(WeightSequence::periodic({1.0, 2.0})).c == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK(*candidate_c(WeightSequence::modified({1.0, 2.0}, {{0, 4.0}})).c ==
        doctest::Approx(0.70710678118654752).epsilon(1e-15));
  const auto split = candidate_c(WeightSequence::split({1.0}, {2.0}, 0));
  CHECK_FALSE(split.feasible());
  CHECK(split.rates.left == doctest::Approx(1.0));
  CHECK(split.rates.right == doctest::Approx(2.0));
  CHECK_THROWS_AS(candidate_c(WeightSequence::sampled(0, {1.0})), std::invalid_argument);
}

TEST_CASE("brute-force c grid: only the candidate keeps windows bounded") {
  // Escape shows as extremes that keep growing with the scanned region.
  const auto seq = WeightSequence::periodic({1.0, 2.0});
  const double candidate = 1.0 / std::sqrt(2.0);
  for (double c = 0.5; c <= 1.0 + 1e-9; c += 0.025) {
    const auto brute = brute_windows(seq, c, -10, 10, 200);
    const bool bounded = brute.bounded_above() && brute.bounded_below();
    CHECK(bounded == (std::abs(c - candidate) < 1e-3));
  }
  const auto at = brute_windows(seq, candidate, -10, 10, 200);
  CHECK((at.bounded_above() && at.bounded_below()));

  // Split(1|2@0): c >= 1 is needed below, c <= 1/2 above.
  const auto split = WeightSequence::split({1.0}, {2.0}, 0);
  for (double c = 0.3; c <= 1.2; c += 0.05) {
    const auto brute = brute_windows(split, c, -100, 100, 200);
    CHECK_FALSE((brute.bounded_above() && brute.bounded_below()));
  }
}

TEST_CASE("scaled_window_stats examples") {
  const auto one = scaled_window_stats(WeightSequence::periodic({1.0}), 1.0);
  CHECK(one.exact);
  CHECK(one.sup_scaled == doctest::Approx(1.0));
  CHECK(one.inf_scaled == doctest::Approx(1.0));
  CHECK(one.condition_holds());

  const auto seq = WeightSequence::periodic({1.0, 2.0});
  const auto at = scaled_window_stats(seq, 1.0 / std::sqrt(2.0));
  CHECK(at.condition_holds());
  CHECK(at.sup_scaled == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(at.inf_scaled == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  REQUIRE(at.sup_witness);
  CHECK(scaled_window(seq, at.c, at.sup_witness->k, at.sup_witness->n).value ==
        doctest::Approx(at.sup_scaled).epsilon(1e-14));
  REQUIRE(at.inf_witness);
  CHECK(scaled_window(seq, at.c, at.inf_witness->k, at.inf_witness->n).value ==
        doctest::Approx(at.inf_scaled).epsilon(1e-14));

  const auto off = scaled_window_stats(seq, 1.0);
  CHECK_FALSE(off.bounded_above());
  CHECK(std::isinf(off.sup_scaled));
  CHECK(off.bounded_below());
  CHECK(off.inf_scaled == doctest::Approx(1.0));
  REQUIRE(off.sup_escape.size() == 3);
  for (std::size_t i = 0; i + 1 < off.sup_escape.size(); ++i) {
    CHECK(off.sup_escape[i].value < off.sup_escape[i + 1].value);
    CHECK((off.sup_escape[i + 1].n - off.sup_escape[i].n) % 2 == 0);
  }
  // Witness values reproduce by direct multiplication.
  for (const auto& w : off.sup_escape) CHECK(rel_close(w.value, direct_product(seq, w.k, w.n), 1e-12));
}

TEST_CASE("inf escape is strictly decreasing") {
  const auto seq = WeightSequence::split({0.5}, {0.5, 0.5}, 3);
  const auto stats = scaled_window_stats(seq, 1.0);
  CHECK(stats.bounded_above());
  REQUIRE(stats.inf_escape.size() == 3);
  CHECK(stats.inf_escape[0].value > stats.inf_escape[1].value);
  CHECK(stats.inf_escape[1].value > stats.inf_escape[2].value);
}

TEST_CASE("exact stats match a brute-force scan") {
  for (const auto& entry : testing::corpus()) {
    if (!entry.similar) continue;
    CAPTURE(entry.spec);
    const auto seq = parse_sequence(entry.spec);
    const double c = *candidate_c(seq).c;
    const auto stats = scaled_window_stats(seq, c);
    const auto brute = brute_windows(seq, c, -40, 40, 80);
    CHECK(rel_close(stats.sup_scaled, brute.sup, 1e-10));
    CHECK(rel_close(stats.inf_scaled, brute.inf, 1e-10));
    CHECK(stats.inf_scaled <= stats.sup_scaled);
  }
}

TEST_CASE("feasible c is unique") {
  for (const auto& entry : testing::corpus()) {
    if (!entry.similar) continue;
    CAPTURE(entry.spec);
    const auto seq = parse_sequence(entry.spec);
    const double c = *candidate_c(seq).c;
    for (double factor : {0.5, 0.9, 0.99, 0.999, 1.001, 1.01, 1.1, 2.0}) {
      CHECK_FALSE(scaled_window_stats(seq, c * factor).condition_holds());
    }
  }
}

TEST_CASE("sampled sequences use horizon mode") {
  const auto seq = WeightSequence::sampled(-2, {1.0, 3.0, 0.5, 2.0}, 1.0, 1.0);
  const auto stats = scaled_window_stats(seq, 1.0, 50);
  CHECK_FALSE(stats.exact);
  CHECK(stats.horizon == 50);
  CHECK(stats.condition_holds());
  const auto brute = brute_windows(seq, 1.0, -50, 50, 50);
  CHECK(rel_close(stats.sup_scaled, brute.sup, 1e-12));
  CHECK(rel_close(stats.inf_scaled, brute.inf, 1e-12));

  const auto mismatched = WeightSequence::sampled(0, {1.0}, 0.5, 2.0);
  CHECK_FALSE(scaled_window_stats(mismatched, 0.5, 50).condition_holds());
}
