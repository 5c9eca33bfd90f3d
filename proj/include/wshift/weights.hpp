#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wshift {

using Complex = std::complex<double>;
using Index = std::int64_t;

/// Thrown when a weight sequence would contain a zero weight or is otherwise
/// malformed. The shift operator built from it must be injective.
class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text grammar. `position` is the 0-based offset into the spec.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// w_k = pattern[k mod p], with the non-negative residue.
struct Periodic {
  std::vector<Complex> pattern;
};

/// A periodic base with finitely many indices replaced.
struct ModifiedPeriodic {
  Periodic base;
  std::map<Index, Complex> overrides;
};

/// `left` for k < split_index, `right` for k >= split_index. Both patterns are
/// indexed by the absolute k (not relative to the split).
struct SplitPeriodic {
  Periodic left;
  Periodic right;
  Index split_index = 0;
};

/// A finite table on [k_min, k_min + values.size()) extended by constant
/// weights on either side.
struct Sampled {
  Index k_min = 0;
  std::vector<Complex> values;
  Complex left_extension{1.0, 0.0};
  Complex right_extension{1.0, 0.0};

  Index k_max() const { return k_min + static_cast<Index>(values.size()) - 1; }
};

enum class SequenceKind { Periodic, ModifiedPeriodic, SplitPeriodic, Sampled };

/// Immutable doubly-infinite sequence of nonzero weights.
class WeightSequence {
 public:
  using Model = std::variant<Periodic, ModifiedPeriodic, SplitPeriodic, Sampled>;

  static WeightSequence periodic(std::vector<Complex> pattern);
  static WeightSequence modified(std::vector<Complex> base, std::map<Index, Complex> overrides);
  static WeightSequence split(std::vector<Complex> left, std::vector<Complex> right, Index split_index);
  static WeightSequence sampled(Index k_min, std::vector<Complex> values,
                                Complex left_extension = 1.0, Complex right_extension = 1.0);

  explicit WeightSequence(Model model);

  const Model& model() const noexcept { return model_; }
  SequenceKind kind() const noexcept { return static_cast<SequenceKind>(model_.index()); }

  /// Every kind except Sampled admits exact analysis.
  bool is_exact() const noexcept { return kind() != SequenceKind::Sampled; }

  Complex at(Index k) const;

  /// Every weight multiplied by `factor` (the weights of factor * S_w).
  WeightSequence scaled(Complex factor) const;

 private:
  Model model_;
};

Complex weight_at(const WeightSequence& seq, Index k);

/// sup_k |w_k| < infinity. Exact for every supported kind.
bool is_bounded(const WeightSequence& seq);

/// All |w_k| equal, i.e. S_w is normal.
bool is_normal_shift(const WeightSequence& seq);

/// Every modulus |w_k| that occurs somewhere in the sequence (each periodic
/// pattern contributes all of its entries).
std::vector<double> occurring_moduli(const WeightSequence& seq);

/// Parse the text grammar:
///   periodic:1,2
///   modified:periodic:1;0=5,3=0.5
///   split:1|2@0
///   sampled:file.csv[;left=<c>][;right=<c>]     (CSV rows: index,re,im)
/// Complex entries are `a`, `a+bi`, `bi`, `i`, with `p/q` fractions allowed.
WeightSequence parse_sequence(std::string_view spec);

Complex parse_complex(std::string_view text);

/// Canonical text for a sequence (inverse of parse_sequence for the
/// non-sampled kinds).
std::string to_spec_string(const WeightSequence& seq);

}  // namespace wshift
