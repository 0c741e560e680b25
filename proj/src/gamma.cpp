#include "stirgamma/gamma.hpp"

#include <cmath>
#include <limits>

namespace stirgamma {

EvalConfig EvalConfig::make_default() {
    EvalConfig config;
    config.shift_threshold = 8.0;
    config.policy = TruncationPolicy::smallest(30);
    config.series = build_series(build_table(62), 31);
    return config;
}

namespace {

void check_config(const EvalConfig& config) {
    if (config.shift_threshold < 1.0)
        throw std::invalid_argument("EvalConfig: shift threshold must be >= 1");
    if (config.policy.cap > config.series.max_terms())
        throw std::invalid_argument("EvalConfig: truncation cap exceeds series length");
}

int shift_for(std::complex<double> z, double threshold) {
    double gap = std::ceil(threshold - z.real());
    return gap > 0.0 ? static_cast<int>(gap) : 0;
}

}  // namespace

EvalResult log_gamma(std::complex<double> z, const EvalConfig& config) {
    check_config(config);
    if (z == std::complex<double>(0.0, 0.0)) throw PoleError("log_gamma: pole at z = 0");
    if (z.real() <= 0.0)
        throw std::domain_error("log_gamma: outside supported sector (requires Re z > 0)");

    EvalResult result;
    result.shift_applied = shift_for(z, config.shift_threshold);

    const std::complex<double> shifted = z + static_cast<double>(result.shift_applied);
    result.terms_used = config.policy.mode == TruncationPolicy::Mode::fixed
                            ? config.policy.fixed_terms
                            : smallest_term_index(config.series, shifted, config.policy.cap);

    std::complex<double> value = eval_log_gamma_raw(config.series, shifted, result.terms_used);
    for (int k = 0; k < result.shift_applied; ++k) {
        value -= std::log(z + static_cast<double>(k));
    }
    result.value = value;
    result.error_estimate = error_estimate(config.series, shifted, result.terms_used);
    return result;
}

EvalResult gamma(std::complex<double> z, const EvalConfig& config) {
    EvalResult result = log_gamma(z, config);
    if (result.value.real() > std::log(std::numeric_limits<double>::max())) {
        throw GammaOverflow("gamma: result overflows double precision", result.value);
    }
    result.value = std::exp(result.value);
    result.error_estimate *= std::abs(result.value);
    return result;
}

double recursion_residual(std::complex<double> z, const EvalConfig& config) {
    const std::complex<double> lhs = gamma(z + 1.0, config).value;
    const std::complex<double> rhs = z * gamma(z, config).value;
    return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace stirgamma
