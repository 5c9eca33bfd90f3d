#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wshift/cli.hpp"
#include "wshift/finmodel.hpp"
#include "wshift/report.hpp"
#include "wshift/similarity.hpp"
#include "wshift/stab.hpp"
#include "wshift/window.hpp"

namespace py = pybind11;
using namespace wshift;

namespace {

// Reports already have a JSON shape; hand Python the same structure.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json stats_to_json(const WindowStats& s) {
  Json out{{"c", s.c},
           {"sup_scaled", std::isfinite(s.sup_scaled) ? Json(s.sup_scaled) : Json(nullptr)},
           {"inf_scaled", s.inf_scaled},
           {"bounded_above", s.bounded_above()},
           {"bounded_below", s.bounded_below()},
           {"condition_holds", s.condition_holds()},
           {"exact", s.exact},
           {"horizon", s.horizon}};
  Json up = Json::array();
  for (const auto& w : s.sup_escape) up.push_back(window_witness_to_json(w));
  Json down = Json::array();
  for (const auto& w : s.inf_escape) down.push_back(window_witness_to_json(w));
  out["sup_escape"] = std::move(up);
  out["inf_escape"] = std::move(down);
  return out;
}

}  // namespace

PYBIND11_MODULE(_wshift, m) {
  m.doc() = "Bilateral weighted shifts: similarity to normal operators, norms, spectra";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidSequence>(m, "InvalidSequence", PyExc_ValueError);

  py::class_<WeightSequence>(m, "WeightSequence")
      .def_static("periodic", &WeightSequence::periodic, py::arg("pattern"))
      .def_static("modified", &WeightSequence::modified, py::arg("base"), py::arg("overrides"))
      .def_static("split", &WeightSequence::split, py::arg("left"), py::arg("right"), py::arg("split_index"))
      .def("__getitem__", &WeightSequence::at)
      .def("scaled", &WeightSequence::scaled, py::arg("factor"))
      .def_property_readonly("kind", [](const WeightSequence& s) { return kind_name(s.kind()); })
      .def_property_readonly("is_exact", &WeightSequence::is_exact)
      .def("__str__", &to_spec_string)
      .def("__repr__", [](const WeightSequence& s) { return "WeightSequence('" + to_spec_string(s) + "')"; });

  m.def("parse_sequence", [](const std::string& spec) { return parse_sequence(spec); }, py::arg("spec"));
  m.def("is_bounded", &is_bounded);
  m.def("is_normal_shift", &is_normal_shift);

  m.def("window_product", &window_product, py::arg("seq"), py::arg("k"), py::arg("n"));
  m.def("log_window_product", &log_window_product, py::arg("seq"), py::arg("k"), py::arg("n"));
  m.def("candidate_c", [](const WeightSequence& seq) -> std::optional<double> { return candidate_c(seq).c; });
  m.def(
      "scaled_window_stats",
      [](const WeightSequence& seq, double c, Index horizon) {
        return to_python(stats_to_json(scaled_window_stats(seq, c, horizon)));
      },
      py::arg("seq"), py::arg("c"), py::arg("horizon") = kDefaultHorizon);

  m.def(
      "decide_similarity",
      [](const WeightSequence& seq, Index horizon) { return to_python(verdict_to_json(decide_similarity(seq, horizon))); },
      py::arg("seq"), py::arg("horizon") = kDefaultHorizon);
  m.def(
      "verify_similarity",
      [](const WeightSequence& seq, Index N) {
        const auto c = candidate_c(seq).c;
        if (!seq.is_exact() || !c) throw std::invalid_argument("verify_similarity: sequence is not similar");
        return verify_similarity(seq, build_similarity(seq, *c), N);
      },
      py::arg("seq"), py::arg("N") = 64);

  m.def("truncation", [](const WeightSequence& seq, Index N) { return FiniteModel::truncation(seq, N).entries(); });
  m.def(
      "wrap", [](const WeightSequence& seq, Index dim, Index origin) { return FiniteModel::wrap(seq, dim, origin).entries(); },
      py::arg("seq"), py::arg("dim"), py::arg("origin") = 0);
  m.def("operator_norm", [](const Matrix& a) { return operator_norm(a).value; });
  m.def("normality_residual", [](const Matrix& a) { return normality_residual(a); });
  m.def("power_norm_exact", &power_norm_exact, py::arg("seq"), py::arg("n"), py::arg("c") = 1.0);
  m.def("inverse_power_norm_exact", &inverse_power_norm_exact, py::arg("seq"), py::arg("n"), py::arg("c") = 1.0);
  m.def(
      "wrap_spectrum", [](const WeightSequence& seq, Index N) { return wrap_spectrum(seq, N).eigenvalues; },
      py::arg("seq"), py::arg("N"));
  m.def(
      "sznagy_check",
      [](const Matrix& a, Index horizon, double threshold) {
        const auto r = sznagy_check(a, horizon, threshold);
        py::dict out;
        out["sup_forward"] = r.sup_forward;
        out["sup_backward"] = r.sup_backward;
        out["power_bounded_within_horizon"] = r.power_bounded_within_horizon;
        return out;
      },
      py::arg("m"), py::arg("horizon"), py::arg("threshold") = kSzNagyThreshold);
  m.def(
      "lemma1_harness",
      [](const Matrix& a, const Matrix& b, const Matrix& x, int n) {
        const auto r = lemma1_harness(a, b, x, n);
        py::dict out;
        out["residual"] = r.residual;
        out["bound"] = r.bound;
        out["holds"] = r.holds;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("x"), py::arg("n"));

  m.def("stab_normal_diag", &stab_normal_diag, py::arg("lambdas"), py::arg("x"));
  m.def("basis_decay_profile", &basis_decay_profile, py::arg("seq"), py::arg("k"), py::arg("horizon"));
  m.def(
      "dichotomy_check",
      [](const WeightSequence& seq, Index k_range, Index horizon) {
        return to_python(stab_report_to_json(dichotomy_check(seq, k_range, horizon)));
      },
      py::arg("seq"), py::arg("k_range") = 10, py::arg("horizon") = 200);
  m.def("stab_similarity_consistency", &stab_similarity_consistency);

  m.def(
      "analyze", [](const std::string& spec) { return to_python(analyze(spec, parse_sequence(spec)).to_json()); },
      py::arg("spec"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
