#pragma once

#include "stirgamma/stirling_series.hpp"

#include <complex>
#include <stdexcept>

namespace stirgamma {

// z = 0 sits on a pole of Gamma; reported separately from the general
// unsupported-sector rejection.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Gamma overflowed double range; the log-domain result is still valid and
// carried along.
class GammaOverflow : public std::range_error {
public:
    GammaOverflow(const std::string& what, std::complex<double> log_value)
        : std::range_error(what), log_value_(log_value) {}
    std::complex<double> log_value() const { return log_value_; }

private:
    std::complex<double> log_value_;
};

struct EvalConfig {
    double shift_threshold = 8.0;  // minimum Re z before the series is applied
    TruncationPolicy policy;
    StirlingSeries series;

    // Threshold 8, smallest-term truncation capped at 30 terms, series built
    // one term past the cap so the first omitted term is always available.
    static EvalConfig make_default();
};

struct EvalResult {
    std::complex<double> value;
    double error_estimate = 0.0;  // first omitted term magnitude at the shifted argument
    int terms_used = 0;
    int shift_applied = 0;
};

/*
 * log Gamma(z) for Re z > 0 via the shifted series: with m chosen so that
 * Re z + m clears the threshold,
 *
 *   log Gamma(z) = [series at z+m] - sum_{k=0}^{m-1} log(z+k),
 *
 * all logs on the principal branch. Throws PoleError for z = 0 and
 * std::domain_error for any other Re z <= 0.
 */
EvalResult log_gamma(std::complex<double> z, const EvalConfig& config);

// exp of log_gamma, error estimate scaled by |value|. Throws GammaOverflow
// when the result exceeds double range.
EvalResult gamma(std::complex<double> z, const EvalConfig& config);

// |Gamma(z+1) - z Gamma(z)| / |Gamma(z+1)|, both factors evaluated through
// this implementation; a self-consistency diagnostic.
double recursion_residual(std::complex<double> z, const EvalConfig& config);

}  // namespace stirgamma
