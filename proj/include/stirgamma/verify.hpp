#pragma once

#include "stirgamma/exact_rational.hpp"
#include "stirgamma/stirling_series.hpp"

#include <vector>

namespace stirgamma {

/*
 * Exact value of Gamma at the half-integer n + 1/2, recorded as the rational
 * factor r_n with Gamma(n + 1/2) = r_n sqrt(pi), r_n = (2n)! / (4^n n!).
 */
struct HalfIntegerValue {
    unsigned n = 0;
    ExactRational r;
};

HalfIntegerValue half_integer_exact(unsigned n);

// Gamma(n) = (n-1)! for integer n >= 1; throws std::domain_error otherwise.
ExactInteger integer_exact(int n);

/*
 * Estimate of the expansion's normalization constant, recovered by dividing
 * the exact value Gamma(w) = r_n sqrt(pi) at w = n + 1/2 by
 * w^(w-1/2) e^-w exp(sum_{k=1}^{terms} a_k / w^(2k-1)).
 *
 * At half-integer w the factor w^(w-1/2) = (n+1/2)^n is rational, so the
 * whole numerator/denominator chain stays exact until one final exp and
 * divide in double precision. Converges to sqrt(2 pi) as n grows.
 */
struct CEstimate {
    unsigned n = 0;
    unsigned terms = 0;
    double value = 0.0;
};

// Requires 1 <= n <= 600 and terms <= series.max_terms() (std::domain_error).
CEstimate estimate_C(unsigned n, unsigned terms, const StirlingSeries& series);

struct ConvergenceRow {
    unsigned n = 0;
    double c_estimate = 0.0;
    double deviation = 0.0;  // |c_estimate - sqrt(2 pi)|
};

/*
 * estimate_C across n_values (strictly increasing, std::invalid_argument
 * otherwise) at a fixed term count. Deviations are formed against a 35-digit
 * sqrt(2 pi) by exact rational subtraction, so no double rounding enters
 * before the final conversion.
 */
std::vector<ConvergenceRow> convergence_study(const std::vector<unsigned>& n_values,
                                              unsigned terms, const StirlingSeries& series);

}  // namespace stirgamma
