#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "wshift/finmodel.hpp"

namespace wshift {

// Exit codes of `analyze`; the other commands use 0 / kExitUsage / kExitUnsupported.
inline constexpr int kExitSimilar = 0;
inline constexpr int kExitNotSimilar = 1;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitUnsupported = 3;
inline constexpr int kExitUsage = 64;

/// Runs one CLI invocation. `args` excludes the program name. Everything for
/// stdout is buffered and written to `out` once at the end.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic complex matrices with entries uniform in [-1,1] + i[-1,1],
/// built from raw 64-bit draws so the stream is identical on every platform.
class SeededMatrices {
 public:
  explicit SeededMatrices(std::uint64_t seed) : state_(seed) {}
  double uniform();  // [-1, 1)
  Matrix random(Index dim);
  /// 1.5 I + G / dim. Since ||G / dim|| <= sqrt(2) < 1.5 it is invertible.
  Matrix well_conditioned(Index dim);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace wshift
