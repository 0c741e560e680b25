#pragma once

#include "stirgamma/exact_rational.hpp"

#include <string>

namespace stirgamma {

/*
 * Non-negative fixed-point decimal: value = digits * 10^exponent10, where
 * `digits` is a plain digit string without sign or point. Producers guarantee
 * an absolute error below one unit in the last stored digit, and
 * guaranteed_digits records how many digits that promise covers.
 */
struct HighPrecisionDecimal {
    std::string digits;
    int exponent10 = 0;
    int guaranteed_digits = 0;

    // Fixed-point rendering, e.g. "1.414213562373095" or "0.0498".
    std::string str() const;
    ExactRational to_rational() const;
    double to_double() const;
};

/*
 * Floor square root on a decimal grid: returns floor(sqrt(x) * 10^digits) as
 * a decimal with exponent10 = -digits, so the absolute error is below
 * 10^-digits. Computed by integer Newton iteration on floor(x * 10^(2*digits)).
 * Throws std::domain_error for x <= 0 and std::invalid_argument for digits < 1.
 */
HighPrecisionDecimal sqrt_decimal(const ExactRational& x, int digits);

}  // namespace stirgamma
