#include "stirgamma/stirling_series.hpp"

#include "stirgamma/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace stirgamma {

const ExactRational& StirlingSeries::coefficient_exact(int n) const {
    if (n < 1 || n > max_terms()) throw std::out_of_range("StirlingSeries: coefficient index");
    return exact_[static_cast<std::size_t>(n - 1)];
}

double StirlingSeries::coefficient(int n) const {
    if (n < 1 || n > max_terms()) throw std::out_of_range("StirlingSeries: coefficient index");
    return approx_[static_cast<std::size_t>(n - 1)];
}

StirlingSeries build_series(const BernoulliTable& table, int n_terms) {
    if (n_terms < 0) throw std::invalid_argument("build_series: negative term count");
    if (table.max_index() < 2 * static_cast<unsigned>(n_terms))
        throw std::invalid_argument("build_series: Bernoulli table too short for requested terms");

    StirlingSeries series;
    series.exact_.reserve(static_cast<std::size_t>(n_terms));
    series.approx_.reserve(static_cast<std::size_t>(n_terms));
    for (int n = 1; n <= n_terms; ++n) {
        ExactRational a = table.bernoulli(2 * static_cast<unsigned>(n)) *
                          ExactRational(factorial(2 * static_cast<unsigned>(n) - 2),
                                        factorial(2 * static_cast<unsigned>(n)));
        series.approx_.push_back(a.to_double());
        series.exact_.push_back(std::move(a));
    }
    series.log_constant_ = half_log_two_pi();
    return series;
}

namespace {

void check_domain(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error("log gamma series: z on the branch cut (real z <= 0)");
}

}  // namespace

std::complex<double> eval_log_gamma_raw(const StirlingSeries& series, std::complex<double> z,
                                        int n_used) {
    check_domain(z);
    if (n_used < 0 || n_used > series.max_terms())
        throw std::out_of_range("eval_log_gamma_raw: term count beyond series");

    const std::complex<double> log_z = std::log(z);
    std::complex<double> value = (z - 0.5) * log_z - z + series.log_constant();

    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> power = inv;  // z^-(2n-1)
    for (int n = 1; n <= n_used; ++n) {
        value += series.coefficient(n) * power;
        power *= inv2;
    }
    return value;
}

int smallest_term_index(const StirlingSeries& series, std::complex<double> z, int cap) {
    if (z == std::complex<double>(0.0, 0.0))
        throw std::domain_error("smallest_term_index: z must be nonzero");
    if (cap < 1 || cap > series.max_terms())
        throw std::invalid_argument("smallest_term_index: cap outside series range");

    const double log_abs_z = std::log(std::abs(z));
    auto log_term = [&](int n) {
        return std::log(std::fabs(series.coefficient(n))) - (2.0 * n - 1.0) * log_abs_z;
    };

    double current = log_term(1);
    for (int n = 1; n < cap; ++n) {
        double next = log_term(n + 1);
        if (next >= current) return n;
        current = next;
    }
    return cap;
}

double error_estimate(const StirlingSeries& series, std::complex<double> z, int n_used) {
    if (z == std::complex<double>(0.0, 0.0))
        throw std::domain_error("error_estimate: z must be nonzero");
    if (n_used < 0 || n_used + 1 > series.max_terms())
        throw std::out_of_range("error_estimate: first omitted term beyond series");

    const double log_abs_z = std::log(std::abs(z));
    return std::exp(std::log(std::fabs(series.coefficient(n_used + 1))) -
                    (2.0 * n_used + 1.0) * log_abs_z);
}

TruncationPolicy TruncationPolicy::fixed(int n_terms, int cap) {
    if (cap < 1) throw std::invalid_argument("TruncationPolicy: cap must be >= 1");
    if (n_terms < 0 || n_terms > cap)
        throw std::invalid_argument("TruncationPolicy: fixed terms must lie in [0, cap]");
    TruncationPolicy policy;
    policy.mode = Mode::fixed;
    policy.fixed_terms = n_terms;
    policy.cap = cap;
    return policy;
}

TruncationPolicy TruncationPolicy::smallest(int cap) {
    if (cap < 1) throw std::invalid_argument("TruncationPolicy: cap must be >= 1");
    TruncationPolicy policy;
    policy.mode = Mode::smallest_term;
    policy.cap = cap;
    return policy;
}

}  // namespace stirgamma
