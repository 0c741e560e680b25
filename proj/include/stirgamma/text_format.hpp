#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace stirgamma {

// Shortest decimal string that round-trips to exactly the same double.
std::string format_double(double x);

// 12 significant digits for human-facing output; converged values print as
// clean anchors instead of trailing rounding noise.
std::string format_double_display(double x);

// "RE+IMi" / "RE-IMi" with the imaginary sign always explicit; a negative
// zero imaginary part is normalized to +0.
std::string format_complex(std::complex<double> z);
std::string format_complex_display(std::complex<double> z);

// Accepts "RE" or "RE,IM"; rejects trailing garbage and empty parts.
std::optional<std::complex<double>> parse_complex(std::string_view text);

std::optional<double> parse_double(std::string_view text);

}  // namespace stirgamma
