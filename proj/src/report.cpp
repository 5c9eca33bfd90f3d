#include "wshift/report.hpp"

#include <cmath>

#include "wshift/format.hpp"

namespace wshift {

namespace {

void emit(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        emit(it.value(), out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        emit(v, out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_real(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

Json real_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

const char* kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Periodic: return "periodic";
    case SequenceKind::ModifiedPeriodic: return "modified";
    case SequenceKind::SplitPeriodic: return "split";
    case SequenceKind::Sampled: return "sampled";
  }
  return "?";
}

Json window_witness_to_json(const WindowWitness& w) {
  return Json{{"k", w.k}, {"n", w.n}, {"value", real_or_null(w.value)}, {"log_value", real_or_null(w.log_value)}};
}

Json verdict_to_json(const SimilarityVerdict& verdict) {
  Json out;
  if (const auto* s = std::get_if<Similar>(&verdict)) {
    out["verdict"] = "similar";
    out["c"] = s->c;
    out["kappa"] = s->kappa;
    out["witness"] = nullptr;
    out["horizon"] = nullptr;
  } else if (const auto* ns = std::get_if<NotSimilar>(&verdict)) {
    out["verdict"] = "not-similar";
    out["c"] = nullptr;
    out["kappa"] = nullptr;
    Json windows = Json::array();
    for (const auto& w : ns->witness) windows.push_back(window_witness_to_json(w));
    out["witness"] = Json{{"reason", to_string(ns->reason)},
                          {"c", ns->witness_c},
                          {"direction", ns->escapes_upward ? "sup-diverges" : "inf-vanishes"},
                          {"left_rate", ns->rates.left},
                          {"right_rate", ns->rates.right},
                          {"windows", std::move(windows)}};
    out["horizon"] = nullptr;
  } else {
    const auto& u = std::get<Undecided>(verdict);
    out["verdict"] = "undecided";
    out["c"] = nullptr;
    out["kappa"] = nullptr;
    out["witness"] = nullptr;
    out["horizon"] = u.horizon;
  }
  return out;
}

Json stab_report_to_json(const StabReport& report) {
  Json decay = Json::array();
  for (const auto& [k, d] : report.per_basis_decay) {
    decay.push_back(Json{{"k", k}, {"decays", d}, {"rate", real_or_null(report.rates.at(k))}});
  }
  return Json{{"verdict", to_string(report.verdict)}, {"rigorous", report.rigorous}, {"basis", std::move(decay)}};
}

Json AnalysisReport::to_json() const {
  Json out;
  out["spec"] = spec;
  out["kind"] = kind_name(kind);
  out["similarity"] = verdict_to_json(verdict);
  out["normal"] = normal;
  out["bounded"] = bounded;
  out["spectrum_radius"] = spectrum_radius ? Json(*spectrum_radius) : Json(nullptr);
  out["wrap"] = wrap ? Json{{"origin", wrap->origin}, {"dim", wrap->dim}, {"radius", wrap->radius}} : Json(nullptr);
  const auto* s = std::get_if<Similar>(&verdict);
  out["norm_table"] = Json{{"n_max", options.n_max}, {"c", s ? Json(s->c) : Json(1.0)}};
  out["horizon"] = options.horizon;
  return out;
}

AnalysisReport analyze(const std::string& spec, const WeightSequence& seq, const AnalysisOptions& options) {
  AnalysisReport report{spec, seq.kind(), decide_similarity(seq, options.horizon), is_normal_shift(seq),
                        is_bounded(seq), std::nullopt, std::nullopt, options};
  if (const auto* s = std::get_if<Similar>(&report.verdict)) {
    report.spectrum_radius = 1.0 / s->c;
    const SpectrumCloud cloud = wrap_spectrum(seq, options.wrap);
    report.wrap = WrapSummary{cloud.origin, cloud.dim, std::abs(cloud.eigenvalues.front())};
  }
  return report;
}

}  // namespace wshift
