#pragma once

#include <complex>
#include <string>

namespace wshift {

/// 17 significant digits, so every double round-trips through text.
std::string format_real(double x);

/// `a+bi` / `a-bi`, or plain `a` when the imaginary part is zero.
std::string format_complex(std::complex<double> z);

}  // namespace wshift
