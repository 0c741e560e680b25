#pragma once

#include "stirgamma/exact_rational.hpp"

namespace testsupport {

/*
 * Natural log of a positive rational with absolute error below 10^-digits,
 * evaluated entirely in exact rational arithmetic. Deliberately independent
 * of the library's floating-point evaluation paths: the argument is scaled by
 * powers of two into [3/4, 3/2) and finished with the atanh series
 * log r = 2 * sum_k u^(2k+1)/(2k+1), u = (r-1)/(r+1).
 */
stirgamma::ExactRational log_rational(const stirgamma::ExactRational& x, int digits);

stirgamma::ExactRational log_integer(const stirgamma::ExactInteger& n, int digits);

}  // namespace testsupport
