#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wshift/format.hpp"
#include "wshift/weights.hpp"

namespace wshift {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view src, std::size_t offset = 0) : src_(src), offset_(offset) {}

  bool done() const { return pos_ >= src_.size(); }
  char peek() const { return done() ? '\0' : src_[pos_]; }
  std::size_t position() const { return offset_ + pos_; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume(std::string_view word) {
    if (src_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string_view rest() const { return src_.substr(std::min(pos_, src_.size())); }
  void skip_all() { pos_ = src_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(position()), position());
  }

  double unsigned_real() {
    const auto [value, len] = scan_double();
    pos_ += len;
    double out = value;
    if (consume('/')) {
      const auto [den, dlen] = scan_double();
      if (den == 0.0) fail("zero denominator");
      pos_ += dlen;
      out /= den;
    }
    return out;
  }

  Index integer() {
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    if (first != last && *first == '+') ++first;
    long long v = 0;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(res.ptr - src_.data());
    return static_cast<Index>(v);
  }

  // One complex literal: a, bi, i, a+bi, a-bi, with optional leading sign.
  Complex complex_literal() {
    const std::size_t start = position();
    auto signed_term = [this](bool& imaginary) {
      double sign = 1.0;
      if (consume('-')) {
        sign = -1.0;
      } else {
        consume('+');
      }
      if (consume('i')) {
        imaginary = true;
        return sign;
      }
      const double v = unsigned_real();
      imaginary = consume('i');
      return sign * v;
    };
    bool first_imag = false;
    const double first = signed_term(first_imag);
    Complex z = first_imag ? Complex(0.0, first) : Complex(first, 0.0);
    if (!first_imag && (peek() == '+' || peek() == '-')) {
      bool second_imag = false;
      const double second = signed_term(second_imag);
      if (!second_imag) fail("expected imaginary part");
      z.imag(second);
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ParseError("non-finite weight at position " + std::to_string(start), start);
    }
    return z;
  }

  std::vector<Complex> complex_list() {
    std::vector<Complex> out;
    do {
      const std::size_t at = position();
      const Complex z = complex_literal();
      if (z == Complex(0.0, 0.0)) {
        throw ParseError("zero weight at position " + std::to_string(at) + " (shift must be injective)", at);
      }
      out.push_back(z);
    } while (consume(','));
    return out;
  }

 private:
  std::pair<double, std::size_t> scan_double() const {
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    if (first == last || !(std::isdigit(static_cast<unsigned char>(*first)) || *first == '.')) {
      fail("expected number");
    }
    double v = 0.0;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{}) fail("malformed number");
    return {v, static_cast<std::size_t>(res.ptr - first)};
  }

  std::string_view src_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

WeightSequence read_sampled_csv(const std::string& path, std::size_t at, Complex left, Complex right) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sampled table '" + path + "'", at);
  std::vector<std::pair<Index, Complex>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    auto bad = [&](const std::string& why) -> ParseError {
      return ParseError(path + ":" + std::to_string(line_no) + ": " + why, at);
    };
    if (fields.size() != 3) throw bad("expected index,re,im");
    Index k = 0;
    double re = 0.0;
    double im = 0.0;
    bool ok = true;
    try {
      Cursor idx(fields[0]);
      k = idx.integer();
      std::size_t used_re = 0;
      std::size_t used_im = 0;
      re = std::stod(fields[1], &used_re);
      im = std::stod(fields[2], &used_im);
      ok = idx.done() && used_re == fields[1].size() && used_im == fields[2].size();
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      if (rows.empty() && line_no == 1) continue;  // header row
      throw bad("malformed row");
    }
    rows.emplace_back(k, Complex(re, im));
  }
  if (rows.empty()) throw ParseError("sampled table '" + path + "' has no rows", at);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Complex> values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].first != rows[i - 1].first + 1) {
      throw ParseError("sampled table '" + path + "' indices must be contiguous", at);
    }
    values.push_back(rows[i].second);
  }
  try {
    return WeightSequence::sampled(rows.front().first, std::move(values), left, right);
  } catch (const InvalidSequence& e) {
    throw ParseError(e.what(), at);
  }
}

}  // namespace

Complex parse_complex(std::string_view text) {
  Cursor c(text);
  const Complex z = c.complex_literal();
  if (!c.done()) c.fail("trailing characters");
  return z;
}

WeightSequence parse_sequence(std::string_view spec) {
  Cursor c(spec);
  if (c.consume("periodic:")) {
    auto pattern = c.complex_list();
    if (!c.done()) c.fail("unexpected character");
    return WeightSequence::periodic(std::move(pattern));
  }
  if (c.consume("modified:")) {
    if (!c.consume("periodic:")) c.fail("expected 'periodic:' base");
    auto base = c.complex_list();
    std::map<Index, Complex> overrides;
    if (c.consume(';') && !c.done()) {
      do {
        const std::size_t at = c.position();
        const Index k = c.integer();
        c.expect('=');
        const Complex w = c.complex_literal();
        if (w == Complex(0.0, 0.0)) throw ParseError("zero override at position " + std::to_string(at), at);
        if (!overrides.emplace(k, w).second) {
          throw ParseError("duplicate override index at position " + std::to_string(at), at);
        }
      } while (c.consume(','));
    }
    if (!c.done()) c.fail("unexpected character");
    return WeightSequence::modified(std::move(base), std::move(overrides));
  }
  if (c.consume("split:")) {
    auto left = c.complex_list();
    c.expect('|');
    auto right = c.complex_list();
    c.expect('@');
    const Index split = c.integer();
    if (!c.done()) c.fail("unexpected character");
    return WeightSequence::split(std::move(left), std::move(right), split);
  }
  if (c.consume("sampled:")) {
    const std::size_t at = c.position();
    const std::string_view rest = c.rest();
    const std::size_t semi = rest.find(';');
    const std::string path(rest.substr(0, semi));
    if (path.empty()) c.fail("expected file name");
    Complex left{1.0, 0.0};
    Complex right{1.0, 0.0};
    if (semi != std::string_view::npos) {
      Cursor opts(rest.substr(semi), at + semi);
      while (opts.consume(';')) {
        if (opts.consume("left=")) {
          left = opts.complex_literal();
        } else if (opts.consume("right=")) {
          right = opts.complex_literal();
        } else {
          opts.fail("expected 'left=' or 'right='");
        }
      }
      if (!opts.done()) opts.fail("unexpected character");
    }
    c.skip_all();
    return read_sampled_csv(path, at, left, right);
  }
  c.fail("unknown sequence kind (expected periodic:, modified:, split: or sampled:)");
}

std::string to_spec_string(const WeightSequence& seq) {
  auto list = [](const std::vector<Complex>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += format_complex(v[i]);
    }
    return out;
  };
  const auto& m = seq.model();
  if (const auto* p = std::get_if<Periodic>(&m)) return "periodic:" + list(p->pattern);
  if (const auto* mp = std::get_if<ModifiedPeriodic>(&m)) {
    std::string out = "modified:periodic:" + list(mp->base.pattern) + ";";
    bool first = true;
    for (const auto& [k, w] : mp->overrides) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(k) + "=" + format_complex(w);
    }
    return out;
  }
  if (const auto* s = std::get_if<SplitPeriodic>(&m)) {
    return "split:" + list(s->left.pattern) + "|" + list(s->right.pattern) + "@" + std::to_string(s->split_index);
  }
  const auto& s = std::get<Sampled>(m);
  return "sampled[" + std::to_string(s.k_min) + ".." + std::to_string(s.k_max()) +
         "];left=" + format_complex(s.left_extension) + ";right=" + format_complex(s.right_extension);
}

}  // namespace wshift
