#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "wshift/finmodel.hpp"
#include "wshift/similarity.hpp"
#include "wshift/stab.hpp"

namespace wshift {

using Json = nlohmann::json;

/// Serialize with 2-space indentation and sorted keys. Doubles get 17
/// significant digits; non-finite ones become null.
std::string dump_json(const Json& j);

/// {"verdict": "similar" | "not-similar" | "undecided", "c", "kappa",
///  "witness", "horizon"}
Json verdict_to_json(const SimilarityVerdict& verdict);

Json window_witness_to_json(const WindowWitness& w);

Json stab_report_to_json(const StabReport& report);

const char* kind_name(SequenceKind kind);

struct WrapSummary {
  Index origin = 0;
  Index dim = 0;
  double radius = 0.0;  // modulus shared by all wrap eigenvalues
};

struct AnalysisOptions {
  Index horizon = kDefaultHorizon;
  Index wrap = 32;
  Index n_max = 10;
};

/// Everything `analyze` reports. The spectrum circle is present exactly when
/// the verdict is Similar.
struct AnalysisReport {
  std::string spec;
  SequenceKind kind = SequenceKind::Periodic;
  SimilarityVerdict verdict;
  bool normal = false;
  bool bounded = true;
  std::optional<double> spectrum_radius;
  std::optional<WrapSummary> wrap;
  AnalysisOptions options;

  Json to_json() const;
};

AnalysisReport analyze(const std::string& spec, const WeightSequence& seq, const AnalysisOptions& options = {});

}  // namespace wshift
