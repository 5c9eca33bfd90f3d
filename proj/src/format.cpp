#include "wshift/format.hpp"

#include <cmath>
#include <cstdio>

namespace wshift {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_real(z.real());
  std::string out = format_real(z.real());
  out += z.imag() < 0 ? "-" : "+";
  out += format_real(std::abs(z.imag()));
  out += "i";
  return out;
}

}  // namespace wshift
