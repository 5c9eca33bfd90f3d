#include "wshift/cli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "wshift/format.hpp"
#include "wshift/report.hpp"

namespace wshift {

std::uint64_t SeededMatrices::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SeededMatrices::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0; }

Matrix SeededMatrices::random(Index dim) {
  Matrix m(dim, dim);
  for (Index j = 0; j < dim; ++j) {
    for (Index i = 0; i < dim; ++i) {
      const double re = uniform();
      m(i, j) = Complex(re, uniform());
    }
  }
  return m;
}

Matrix SeededMatrices::well_conditioned(Index dim) {
  Matrix g = random(dim) / static_cast<double>(dim);
  g.diagonal().array() += 1.5;
  return g;
}

namespace {

struct Options {
  std::string spec;
  Index horizon = kDefaultHorizon;
  Index wrap = 32;
  Index n_max = 10;
  double c = 1.0;
  bool json = false;
  bool csv = false;
  std::uint64_t seed = 1;
  Index dim = 5;
  int power = 4;
  int count = 10;
  Index oracle_horizon = 100;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const WeightSequence seq = parse_sequence(o.spec);
  AnalysisOptions opts;
  opts.horizon = o.horizon;
  opts.wrap = o.wrap;
  opts.n_max = o.n_max;
  const AnalysisReport report = analyze(o.spec, seq, opts);
  out << dump_json(report.to_json());
  if (std::holds_alternative<Similar>(report.verdict)) return kExitSimilar;
  if (std::holds_alternative<NotSimilar>(report.verdict)) return kExitNotSimilar;
  return kExitUndecided;
}

int cmd_norms(const Options& o, std::ostream& out) {
  const WeightSequence seq = parse_sequence(o.spec);
  if (!seq.is_exact()) throw std::domain_error("norms: exact power norms need a periodic, modified or split sequence");
  if (o.n_max < 1) throw std::invalid_argument("norms: --n-max must be >= 1");
  if (!(o.c > 0.0)) throw std::invalid_argument("norms: --c must be positive");
  Json rows = Json::array();
  std::string csv = "n,forward_norm,backward_norm\n";
  for (Index n = 1; n <= o.n_max; ++n) {
    const double fwd = power_norm_exact(seq, n, o.c);
    const double bwd = inverse_power_norm_exact(seq, n, o.c);
    csv += std::to_string(n) + "," + format_real(fwd) + "," + format_real(bwd) + "\n";
    rows.push_back(Json{{"n", n}, {"forward_norm", fwd}, {"backward_norm", bwd}});
  }
  if (o.json) {
    out << dump_json(Json{{"spec", o.spec}, {"c", o.c}, {"rows", std::move(rows)}});
  } else {
    out << csv;
  }
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const WeightSequence seq = parse_sequence(o.spec);
  if (!seq.is_exact()) throw std::domain_error("spectrum: wrap spectra need a periodic, modified or split sequence");
  const SpectrumCloud cloud = wrap_spectrum(seq, o.wrap);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& z : cloud.eigenvalues) {
      rows.push_back(Json{{"re", z.real()}, {"im", z.imag()}, {"modulus", std::abs(z)}});
    }
    out << dump_json(Json{{"spec", o.spec}, {"origin", cloud.origin}, {"dim", cloud.dim}, {"eigenvalues", rows}});
  } else {
    std::string csv = "re,im,modulus\n";
    for (const auto& z : cloud.eigenvalues) {
      csv += format_real(z.real()) + "," + format_real(z.imag()) + "," + format_real(std::abs(z)) + "\n";
    }
    out << csv;
  }
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.dim < 1 || o.dim > 64) throw std::invalid_argument("oracle: --dim must be in [1, 64]");
  if (o.power < 1) throw std::invalid_argument("oracle: --n must be >= 1");
  if (o.count < 1) throw std::invalid_argument("oracle: --count must be >= 1");
  SeededMatrices rng(o.seed);

  Json powers = Json::array();
  double worst_ratio = 0.0;
  bool powers_ok = true;
  for (int i = 0; i < o.count; ++i) {
    const Matrix a = rng.random(o.dim);
    const Matrix x = rng.well_conditioned(o.dim);
    const Matrix b = x * a * x.inverse();
    const Lemma1Result r = lemma1_harness(a, b, x, o.power);
    worst_ratio = std::max(worst_ratio, r.residual / r.bound);
    powers_ok = powers_ok && r.holds;
    powers.push_back(Json{{"residual", r.residual}, {"bound", r.bound}, {"holds", r.holds}});
  }

  Json nagy = Json::array();
  bool nagy_ok = true;
  for (int i = 0; i < o.count; ++i) {
    Matrix u = Matrix::Zero(o.dim, o.dim);
    for (Index j = 0; j < o.dim; ++j) u(j, j) = std::polar(1.0, M_PI * rng.uniform());
    const Matrix x = rng.well_conditioned(o.dim);
    const Matrix x_inv = x.inverse();
    const double kappa = operator_norm(x).value * operator_norm(x_inv).value;
    const SzNagyReport r = sznagy_check(Matrix(x * u * x_inv), o.oracle_horizon);
    const bool holds = std::max(r.sup_forward, r.sup_backward) <= kappa * kappa * (1.0 + 1e-9);
    nagy_ok = nagy_ok && holds;
    nagy.push_back(Json{{"kappa", kappa},
                        {"sup_forward", r.sup_forward},
                        {"sup_backward", r.sup_backward},
                        {"bound", kappa * kappa},
                        {"holds", holds}});
  }

  out << dump_json(Json{{"seed", o.seed},
                        {"dim", o.dim},
                        {"n", o.power},
                        {"horizon", o.oracle_horizon},
                        {"lemma1", {{"instances", std::move(powers)}, {"worst_ratio", worst_ratio}, {"all_hold", powers_ok}}},
                        {"sznagy", {{"instances", std::move(nagy)}, {"all_hold", nagy_ok}}}});
  return powers_ok && nagy_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Similarity of bilateral weighted shifts to normal operators", "wshift"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "Decide similarity to a normal operator (JSON)");
  analyze->add_option("spec", o.spec, "Weight sequence, e.g. periodic:1,2")->required();
  analyze->add_option("--horizon", o.horizon, "Scan horizon for sampled sequences");
  analyze->add_option("--wrap", o.wrap, "Minimum wrap-model size for the spectrum circle");
  analyze->add_option("--n-max", o.n_max, "Norm-table length echoed in the report");
  analyze->add_flag("--json", o.json, "JSON output (the default)");

  auto* norms = app.add_subcommand("norms", "Exact ||(c S_w)^n|| and ||(c S_w)^-n|| table");
  norms->add_option("spec", o.spec)->required();
  norms->add_option("--n-max", o.n_max, "Largest power");
  norms->add_option("--c", o.c, "Scaling constant");
  auto* norms_fmt = norms->add_option_group("format");
  norms_fmt->add_flag("--json", o.json);
  norms_fmt->add_flag("--csv", o.csv);
  norms_fmt->require_option(0, 1);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the wrap model");
  spectrum->add_option("spec", o.spec)->required();
  spectrum->add_option("--wrap", o.wrap, "Minimum wrap-model size");
  auto* spectrum_fmt = spectrum->add_option_group("format");
  spectrum_fmt->add_flag("--json", o.json);
  spectrum_fmt->add_flag("--csv", o.csv);
  spectrum_fmt->require_option(0, 1);

  auto* oracle = app.add_subcommand("oracle", "Seeded matrix checks: similarity of powers and power-boundedness");
  oracle->add_option("--seed", o.seed, "Random seed");
  oracle->add_option("--dim", o.dim, "Matrix dimension");
  oracle->add_option("--n", o.power, "Power for the similarity-of-powers check");
  oracle->add_option("--count", o.count, "Instances per check");
  oracle->add_option("--horizon", o.oracle_horizon, "Power horizon for the boundedness check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (analyze->parsed()) {
      code = cmd_analyze(o, buffer);
    } else if (norms->parsed()) {
      code = cmd_norms(o, buffer);
    } else if (spectrum->parsed()) {
      code = cmd_spectrum(o, buffer);
    } else {
      code = cmd_oracle(o, buffer);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    err << "  " << o.spec << "\n  " << std::string(e.position(), ' ') << "^\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace wshift
