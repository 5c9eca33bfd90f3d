#include "wshift/finmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wshift/detail/structure.hpp"

namespace wshift {

namespace {

using detail::CompensatedSum;

constexpr int kMaxIterations = 10000;
constexpr double kEigenResidualTolerance = 1e-12;

void check_dim(Index dim, const char* where) {
  if (dim < 1 || dim > kMaxModelDim) {
    throw std::invalid_argument(std::string(where) + ": model dimension must be in [1, 4096]");
  }
}

Index round_up(Index n, Index multiple) { return ((n + multiple - 1) / multiple) * multiple; }

// One power-iteration run on M*M from `start`; returns the Rayleigh estimate
// of the top eigenvalue of M*M.
NormEstimate power_iterate(const Matrix& m, Vector x) {
  NormEstimate est;
  x.normalize();
  double lambda = 0.0;
  for (int it = 1; it <= kMaxIterations; ++it) {
    const Vector y = m * x;
    const Vector z = m.adjoint() * y;
    lambda = y.squaredNorm();
    est.iterations = it;
    const double znorm = z.norm();
    if (znorm == 0.0) {
      est.value = 0.0;
      return est;
    }
    if ((z - lambda * x).norm() <= kEigenResidualTolerance * lambda) {
      est.value = std::sqrt(lambda);
      return est;
    }
    x = z / znorm;
  }
  est.converged = false;
  est.value = std::sqrt(lambda);
  return est;
}

// max over k of c^n P(k, n) (sign = +1) or of 1 / (c^n P(k, n)) (sign = -1),
// as a log. Windows fully inside a tail repeat with the tail's period.
// Norm of (c S_w)^{sign n}: the extreme window is located in the log domain,
// then recomputed by direct multiplication when that product is representable
// so simple inputs give exact answers.
double extreme_window(const WeightSequence& seq, Index n, double c, int sign) {
  if (!seq.is_exact()) throw std::invalid_argument("exact power norms require an exact sequence kind");
  if (n < 1) throw std::invalid_argument("power norm: n must be >= 1");
  if (!(c > 0.0)) throw std::invalid_argument("power norm: c must be positive");
  const auto t = detail::tail_structure(seq);
  const Index lo = t.core_begin - n - t.left_period() - 1;
  const Index hi = t.core_end + t.right_period();
  const detail::LogWalk walk(seq, std::log(c), lo, hi + n);
  double best = -std::numeric_limits<double>::infinity();
  Index best_k = lo;
  for (Index k = lo; k <= hi; ++k) {
    const double v = sign * (walk(k + n) - walk(k));
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  const double from_logs = std::exp(best);
  if (n > 4096) return from_logs;
  double prod = 1.0;
  for (Index j = 1; j <= n; ++j) prod *= c * std::abs(seq.at(best_k + j));
  const double direct = sign > 0 ? prod : 1.0 / prod;
  if (!std::isfinite(direct) || direct == 0.0 || !std::isnormal(prod)) return from_logs;
  return std::abs(direct - from_logs) <= 1e-9 * from_logs ? direct : from_logs;
}

}  // namespace

FiniteModel FiniteModel::truncation(const WeightSequence& seq, Index N) {
  check_dim(2 * N + 1, "truncation");
  Matrix m = Matrix::Zero(2 * N + 1, 2 * N + 1);
  for (Index k = -N; k < N; ++k) m(k + 1 + N, k + N) = seq.at(k);
  return FiniteModel(std::move(m), TruncationModel{seq, N});
}

FiniteModel FiniteModel::inverse_truncation(const WeightSequence& seq, Index N) {
  check_dim(2 * N + 1, "inverse truncation");
  Matrix m = Matrix::Zero(2 * N + 1, 2 * N + 1);
  for (Index k = -N; k < N; ++k) m(k + N, k + 1 + N) = 1.0 / seq.at(k);
  return FiniteModel(std::move(m), InverseTruncationModel{seq, N});
}

FiniteModel FiniteModel::wrap(const WeightSequence& seq, Index dim, Index origin) {
  check_dim(dim, "wrap");
  if (const auto* p = std::get_if<Periodic>(&seq.model())) {
    if (dim % static_cast<Index>(p->pattern.size()) != 0) {
      throw std::invalid_argument("wrap: dimension must be a multiple of the period");
    }
  }
  Matrix m = Matrix::Zero(dim, dim);
  for (Index k = 0; k < dim; ++k) m((k + 1) % dim, k) = seq.at(origin + k);
  return FiniteModel(std::move(m), WrapModel{seq, dim, origin});
}

FiniteModel FiniteModel::general(Matrix entries) {
  if (entries.rows() != entries.cols()) throw std::invalid_argument("general model must be square");
  check_dim(static_cast<Index>(entries.rows()), "general");
  return FiniteModel(std::move(entries), GeneralModel{});
}

NormEstimate operator_norm(const Matrix& m) {
  if (m.size() == 0) return {};
  if (m.norm() == 0.0) return {};
  const Index cols = m.cols();
  NormEstimate first = power_iterate(m, Vector::Ones(cols));
  if (first.value == 0.0) {
    // The all-ones start lies in the kernel; restart from the heaviest column.
    Index heaviest = 0;
    m.colwise().norm().maxCoeff(&heaviest);
    first = power_iterate(m, Vector::Unit(cols, heaviest));
  }
  // A second, deterministically perturbed start guards against the all-ones
  // vector being orthogonal to the top singular vector.
  Vector start = Vector::Ones(cols);
  for (Index j = 0; j < cols; ++j) {
    start(j) += Complex(std::cos(1.3 * static_cast<double>(j + 1)), std::sin(0.7 * static_cast<double>(j + 1)));
  }
  NormEstimate second = power_iterate(m, start);
  NormEstimate best = second.value > first.value ? second : first;
  best.iterations = first.iterations + second.iterations;
  best.converged = first.converged && second.converged;
  return best;
}

NormEstimate operator_norm(const FiniteModel& m) { return operator_norm(m.entries()); }

Matrix matrix_power(const Matrix& m, int n) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: square matrix required");
  if (n < 0) throw std::invalid_argument("matrix_power: n must be >= 0");
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) out = (out * m).eval();
  return out;
}

double power_norm_exact(const WeightSequence& seq, Index n, double c) {
  return extreme_window(seq, n, c, +1);
}

double inverse_power_norm_exact(const WeightSequence& seq, Index n, double c) {
  return extreme_window(seq, n, c, -1);
}

SzNagyReport sznagy_check(const Matrix& m, Index horizon, double threshold) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("sznagy_check: square matrix required");
  if (horizon < 1) throw std::invalid_argument("sznagy_check: horizon must be >= 1");
  const Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) throw SingularMatrix("sznagy_check: matrix is singular");
  const Matrix inv = lu.inverse();
  const double norm = operator_norm(m).value;
  const double sigma_min = 1.0 / operator_norm(inv).value;
  if (!(sigma_min > 1e-12 * norm)) throw SingularMatrix("sznagy_check: smallest singular value below 1e-12 ||M||");

  SzNagyReport out;
  out.horizon = horizon;
  out.threshold = threshold;
  Matrix fwd = m;
  Matrix bwd = inv;
  for (Index n = 1; n <= horizon; ++n) {
    if (n > 1) {
      fwd = (fwd * m).eval();
      bwd = (bwd * inv).eval();
    }
    out.forward_norms.push_back(operator_norm(fwd).value);
    out.backward_norms.push_back(operator_norm(bwd).value);
    out.sup_forward = std::max(out.sup_forward, out.forward_norms.back());
    out.sup_backward = std::max(out.sup_backward, out.backward_norms.back());
  }
  out.power_bounded_within_horizon = std::max(out.sup_forward, out.sup_backward) <= threshold;
  return out;
}

SzNagyReport sznagy_check(const FiniteModel& m, Index horizon, double threshold) {
  return sznagy_check(m.entries(), horizon, threshold);
}

double normality_residual(const Matrix& m) {
  const Matrix commutator = m * m.adjoint() - m.adjoint() * m;
  return operator_norm(commutator).value;
}

double normality_residual(const FiniteModel& m) { return normality_residual(m.entries()); }

WrapWindow structural_wrap_window(const WeightSequence& seq, Index min_dim) {
  min_dim = std::max<Index>(min_dim, 1);
  if (const auto* p = std::get_if<Periodic>(&seq.model())) {
    return {0, round_up(min_dim, static_cast<Index>(p->pattern.size()))};
  }
  const auto t = detail::tail_structure(seq);
  const Index pl = t.left_period();
  const Index pr = t.right_period();
  const Index core = t.core_end - t.core_begin;
  const Index left_periods = std::max<Index>(1, (std::max<Index>(min_dim - core, 0) / 2 + pl - 1) / pl);
  const Index remaining = std::max<Index>(min_dim - core - left_periods * pl, 0);
  const Index right_periods = std::max<Index>(1, (remaining + pr - 1) / pr);
  return {t.core_begin - left_periods * pl, left_periods * pl + core + right_periods * pr};
}

std::vector<Complex> cyclic_shift_eigenvalues(const WeightSequence& seq, Index origin, Index dim) {
  if (dim < 1) throw std::invalid_argument("cyclic_shift_eigenvalues: dim must be >= 1");
  CompensatedSum log_mod;
  CompensatedSum phase;
  for (Index k = origin; k < origin + dim; ++k) {
    const Complex w = seq.at(k);
    log_mod.add(std::log(std::abs(w)));
    phase.add(std::arg(w));
  }
  const double n = static_cast<double>(dim);
  const double radius = std::exp(log_mod.value() / n);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(dim));
  for (Index j = 0; j < dim; ++j) {
    out.push_back(std::polar(radius, (phase.value() + 2.0 * std::numbers::pi * static_cast<double>(j)) / n));
  }
  return out;
}

SpectrumCloud wrap_spectrum(const WeightSequence& seq, Index N) {
  if (!seq.is_exact()) throw std::invalid_argument("wrap_spectrum: requires an exact sequence kind");
  if (N < 1) throw std::invalid_argument("wrap_spectrum: N must be >= 1");
  WrapWindow w;
  if (const auto* mp = std::get_if<ModifiedPeriodic>(&seq.model())) {
    const WeightSequence base = WeightSequence::periodic(mp->base.pattern);
    w = structural_wrap_window(base, N);
    return {w.origin, w.dim, cyclic_shift_eigenvalues(base, w.origin, w.dim)};
  }
  w = structural_wrap_window(seq, N);
  return {w.origin, w.dim, cyclic_shift_eigenvalues(seq, w.origin, w.dim)};
}

Lemma1Result lemma1_harness(const Matrix& a, const Matrix& b, const Matrix& x, int n) {
  if (a.rows() != a.cols() || b.rows() != a.rows() || b.cols() != a.cols() || x.rows() != a.rows() ||
      x.cols() != a.cols()) {
    throw PreconditionViolation("lemma1_harness: A, B, X must be square of equal size");
  }
  if (n < 1) throw PreconditionViolation("lemma1_harness: n must be >= 1");
  const Eigen::FullPivLU<Matrix> lu(x);
  if (!lu.isInvertible()) throw PreconditionViolation("lemma1_harness: X is not invertible");
  const double norm_x = operator_norm(x).value;
  const double norm_a = operator_norm(a).value;
  const double intertwining = operator_norm(Matrix(x * a - b * x)).value;
  if (intertwining > 1e-12 * norm_x * norm_a) {
    throw PreconditionViolation("lemma1_harness: X A = B X does not hold to 1e-12 ||X|| ||A||");
  }
  Lemma1Result out;
  out.residual = operator_norm(Matrix(x * matrix_power(a, n) - matrix_power(b, n) * x)).value;
  out.bound = 1e-8 * norm_x * std::pow(norm_a, n);
  out.holds = out.residual <= out.bound;
  return out;
}

Lemma1Result lemma1_harness(const FiniteModel& a, const FiniteModel& b, const FiniteModel& x, int n) {
  return lemma1_harness(a.entries(), b.entries(), x.entries(), n);
}

PowerImage apply_power(const WeightSequence& seq, const SparseVector& x, Index n) {
  if (n < 1) throw std::invalid_argument("apply_power: n must be >= 1");
  PowerImage out;
  std::vector<double> logs;
  for (const auto& [k, xi] : x) {
    if (xi == Complex(0.0, 0.0)) continue;
    CompensatedSum log_mod;
    CompensatedSum phase;
    log_mod.add(std::log(std::abs(xi)));
    phase.add(std::arg(xi));
    for (Index j = 0; j < n; ++j) {
      const Complex w = seq.at(k + j);
      log_mod.add(std::log(std::abs(w)));
      phase.add(std::arg(w));
    }
    out.image[k + n] = std::polar(std::exp(log_mod.value()), phase.value());
    logs.push_back(log_mod.value());
  }
  if (logs.empty()) return out;
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(2.0 * (l - top));
  out.norm = std::exp(top) * std::sqrt(acc);
  return out;
}

}  // namespace wshift
