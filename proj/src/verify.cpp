#include "stirgamma/verify.hpp"

#include "stirgamma/constants.hpp"
#include "stirgamma/decimal.hpp"

#include <cmath>
#include <stdexcept>

namespace stirgamma {

namespace {

const ExactRational& sqrt_pi_rational_35() {
    static const ExactRational value = sqrt_pi_decimal(35).to_rational();
    return value;
}

const ExactRational& sqrt_two_pi_rational_35() {
    static const ExactRational value = sqrt_two_pi_decimal(35).to_rational();
    return value;
}

}  // namespace

HalfIntegerValue half_integer_exact(unsigned n) {
    HalfIntegerValue out;
    out.n = n;
    out.r = ExactRational(factorial(2 * n),
                          ExactInteger::pow(ExactInteger(4), n) * factorial(n));
    return out;
}

ExactInteger integer_exact(int n) {
    if (n <= 0) throw std::domain_error("integer_exact: Gamma pole at non-positive integer");
    return factorial(static_cast<unsigned>(n) - 1);
}

CEstimate estimate_C(unsigned n, unsigned terms, const StirlingSeries& series) {
    if (n < 1) throw std::domain_error("estimate_C: n must be >= 1");
    if (n > 600) throw std::domain_error("estimate_C: n beyond double exponent range");
    if (terms > static_cast<unsigned>(series.max_terms()))
        throw std::domain_error("estimate_C: term count beyond series");

    const ExactRational w(static_cast<std::int64_t>(2 * n + 1), 2);

    // Exact numerator Gamma(w) / w^(w-1/2) = r_n sqrt(pi) / (n+1/2)^n.
    ExactRational numer = half_integer_exact(n).r * sqrt_pi_rational_35() /
                          ExactRational::pow(w, n);

    // Exact truncated correction sum; joins -w inside one exp call.
    ExactRational sum;
    const ExactRational inv_w2 = (w * w).reciprocal();
    ExactRational inv_power = w.reciprocal();  // w^-(2k-1)
    for (unsigned k = 1; k <= terms; ++k) {
        sum += series.coefficient_exact(static_cast<int>(k)) * inv_power;
        inv_power *= inv_w2;
    }

    CEstimate out;
    out.n = n;
    out.terms = terms;
    out.value = numer.to_double() / std::exp(sum.to_double() - w.to_double());
    return out;
}

std::vector<ConvergenceRow> convergence_study(const std::vector<unsigned>& n_values,
                                              unsigned terms, const StirlingSeries& series) {
    for (std::size_t i = 1; i < n_values.size(); ++i) {
        if (n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("convergence_study: n values must strictly increase");
    }

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_values.size());
    for (unsigned n : n_values) {
        ConvergenceRow row;
        row.n = n;
        row.c_estimate = estimate_C(n, terms, series).value;
        row.deviation =
            (ExactRational::from_double(row.c_estimate) - sqrt_two_pi_rational_35())
                .abs()
                .to_double();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace stirgamma
