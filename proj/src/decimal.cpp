#include "stirgamma/decimal.hpp"

#include <cstdlib>
#include <stdexcept>

namespace stirgamma {

std::string HighPrecisionDecimal::str() const {
    if (exponent10 >= 0) {
        std::string out = digits;
        out.append(static_cast<std::size_t>(exponent10), '0');
        return out;
    }
    const auto frac = static_cast<std::size_t>(-exponent10);
    if (digits.size() <= frac) {
        return "0." + std::string(frac - digits.size(), '0') + digits;
    }
    std::string out = digits;
    out.insert(out.size() - frac, ".");
    return out;
}

ExactRational HighPrecisionDecimal::to_rational() const {
    ExactInteger mant = ExactInteger::from_string(digits);
    if (exponent10 >= 0)
        return ExactRational(mant * ExactInteger::pow10(static_cast<unsigned>(exponent10)));
    return ExactRational(mant, ExactInteger::pow10(static_cast<unsigned>(-exponent10)));
}

double HighPrecisionDecimal::to_double() const {
    // strtod rounds the full digit string correctly.
    return std::strtod(str().c_str(), nullptr);
}

HighPrecisionDecimal sqrt_decimal(const ExactRational& x, int digits) {
    if (digits < 1) throw std::invalid_argument("sqrt_decimal: digits must be >= 1");
    if (x.sign() <= 0) throw std::domain_error("sqrt_decimal: argument must be positive");

    ExactInteger scaled = x.floor_scaled_pow10(static_cast<unsigned>(2 * digits));
    ExactInteger root = ExactInteger::isqrt(scaled);

    HighPrecisionDecimal out;
    out.digits = root.to_string();
    out.exponent10 = -digits;
    out.guaranteed_digits = static_cast<int>(out.digits.size());
    return out;
}

}  // namespace stirgamma
