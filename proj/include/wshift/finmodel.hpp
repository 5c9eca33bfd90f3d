#pragma once

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "wshift/weights.hpp"

namespace wshift {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Index kMaxModelDim = 4096;

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Basis e_{-N}, ..., e_N; entry (k+1, k) = w_k for k = -N..N-1.
struct TruncationModel {
  WeightSequence seq;
  Index N;
};

/// Truncation of S_w^{-1}: entry (k, k+1) = 1 / w_k for k = -N..N-1.
struct InverseTruncationModel {
  WeightSequence seq;
  Index N;
};

/// Cyclic model on the indices origin..origin+dim-1: entry
/// ((k+1) mod dim, k) = w_{origin+k}.
struct WrapModel {
  WeightSequence seq;
  Index dim;
  Index origin;
};

struct GeneralModel {};

class FiniteModel {
 public:
  using Kind = std::variant<TruncationModel, InverseTruncationModel, WrapModel, GeneralModel>;

  static FiniteModel truncation(const WeightSequence& seq, Index N);
  static FiniteModel inverse_truncation(const WeightSequence& seq, Index N);
  /// A periodic sequence requires `dim` to be a multiple of its period.
  static FiniteModel wrap(const WeightSequence& seq, Index dim, Index origin = 0);
  static FiniteModel general(Matrix entries);

  Index dim() const noexcept { return static_cast<Index>(entries_.rows()); }
  const Matrix& entries() const noexcept { return entries_; }
  const Kind& kind() const noexcept { return kind_; }

 private:
  FiniteModel(Matrix entries, Kind kind) : entries_(std::move(entries)), kind_(std::move(kind)) {}

  Matrix entries_;
  Kind kind_;
};

/// Largest singular value by power iteration on M*M from the all-ones vector.
/// `converged` is false when the iteration cap was hit; the value is then the
/// last iterate and should not be trusted.
struct NormEstimate {
  double value = 0.0;
  int iterations = 0;
  bool converged = true;
};

NormEstimate operator_norm(const Matrix& m);
NormEstimate operator_norm(const FiniteModel& m);

Matrix matrix_power(const Matrix& m, int n);

/// ||(c S_w)^n|| = c^n sup_k prod_{j=1}^{n} |w_{k+j}|, exact for exact kinds.
double power_norm_exact(const WeightSequence& seq, Index n, double c = 1.0);

/// ||(c S_w)^{-n}|| = sup_k 1 / (c^n prod_{j=1}^{n} |w_{k+j}|).
double inverse_power_norm_exact(const WeightSequence& seq, Index n, double c = 1.0);

/// Power-boundedness at a finite horizon. The boolean is a heuristic: a
/// threshold crossing within the horizon, not a proof either way.
struct SzNagyReport {
  double sup_forward = 0.0;
  double sup_backward = 0.0;
  bool power_bounded_within_horizon = false;
  Index horizon = 0;
  double threshold = 0.0;
  std::vector<double> forward_norms;   // ||M^n||, n = 1..horizon
  std::vector<double> backward_norms;  // ||M^{-n}||
};

inline constexpr double kSzNagyThreshold = 1e6;

SzNagyReport sznagy_check(const Matrix& m, Index horizon, double threshold = kSzNagyThreshold);
SzNagyReport sznagy_check(const FiniteModel& m, Index horizon, double threshold = kSzNagyThreshold);

/// ||M M* - M* M||.
double normality_residual(const Matrix& m);
double normality_residual(const FiniteModel& m);

/// Index window used to build a wrap model: it starts and ends with whole
/// periods of the tails and contains the core (overrides, split point or
/// sampled table).
struct WrapWindow {
  Index origin = 0;
  Index dim = 0;
};

WrapWindow structural_wrap_window(const WeightSequence& seq, Index min_dim);

/// Eigenvalues of a weighted cyclic shift of size N: the N roots of
/// lambda^N = prod w_k over the window.
struct SpectrumCloud {
  Index origin = 0;
  Index dim = 0;
  std::vector<Complex> eigenvalues;
};

std::vector<Complex> cyclic_shift_eigenvalues(const WeightSequence& seq, Index origin, Index dim);

/// Spectrum of the wrap model of the sequence's periodic tails (overrides of a
/// modified sequence are finite perturbations and do not move the spectrum).
/// `N` is rounded up so the window holds whole periods. Exact kinds only.
SpectrumCloud wrap_spectrum(const WeightSequence& seq, Index N);

/// Checks that a similarity X A = B X carries over to the n-th powers.
struct Lemma1Result {
  double residual = 0.0;  // ||X A^n - B^n X||
  double bound = 0.0;     // 1e-8 ||X|| ||A||^n
  bool holds = false;
};

Lemma1Result lemma1_harness(const Matrix& a, const Matrix& b, const Matrix& x, int n);
Lemma1Result lemma1_harness(const FiniteModel& a, const FiniteModel& b, const FiniteModel& x, int n);

/// Finitely supported vector sum_k xi_k e_k.
using SparseVector = std::map<Index, Complex>;

struct PowerImage {
  SparseVector image;
  double norm = 0.0;
};

/// S_w^n x; the coefficient at k+n is xi_k w_k ... w_{k+n-1}.
PowerImage apply_power(const WeightSequence& seq, const SparseVector& x, Index n);

}  // namespace wshift
