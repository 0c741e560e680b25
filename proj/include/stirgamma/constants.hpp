#pragma once

#include "stirgamma/decimal.hpp"
#include "stirgamma/exact_rational.hpp"

namespace stirgamma {

/*
 * arctan(1/m) as an exact rational partial sum of the alternating series,
 * truncated so the absolute error is below 10^-digits. Requires m >= 2.
 */
ExactRational arctan_reciprocal(unsigned m, int digits);

/*
 * Pi on the 10^-80 grid, computed once per process from Machin's formula
 * 16*arctan(1/5) - 4*arctan(1/239) and cached. Absolute error < 2*10^-80.
 */
const ExactRational& pi_rational();

ExactRational two_pi_rational();

HighPrecisionDecimal sqrt_pi_decimal(int digits);
HighPrecisionDecimal sqrt_two_pi_decimal(int digits);

// (1/2) log(2*pi) in double precision, derived from pi_rational().
double half_log_two_pi();

}  // namespace stirgamma
