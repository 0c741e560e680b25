#include "stirgamma/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace stirgamma {

ExactRational arctan_reciprocal(unsigned m, int digits) {
    if (m < 2) throw std::invalid_argument("arctan_reciprocal: m must be >= 2");
    if (digits < 1) throw std::invalid_argument("arctan_reciprocal: digits must be >= 1");

    // arctan(1/m) = sum_k (-1)^k / ((2k+1) m^(2k+1)); alternating, so the
    // truncation error is bounded by the first omitted term.
    const ExactRational bound(ExactInteger(1), ExactInteger::pow10(static_cast<unsigned>(digits)));
    const ExactInteger m2(static_cast<std::int64_t>(m) * m);

    ExactRational sum;
    ExactInteger mpow(static_cast<std::int64_t>(m));  // m^(2k+1)
    for (unsigned k = 0;; ++k) {
        ExactRational term(ExactInteger(1),
                           mpow * ExactInteger(static_cast<std::int64_t>(2 * k + 1)));
        if (term < bound) break;
        sum += (k % 2 == 0) ? term : -term;
        mpow *= m2;
    }
    return sum;
}

const ExactRational& pi_rational() {
    static const ExactRational pi = [] {
        // Budget: |16 e1| + |4 e2| + grid truncation < 2*10^-80.
        const int digits = 83;
        ExactRational raw = ExactRational(16) * arctan_reciprocal(5, digits) -
                            ExactRational(4) * arctan_reciprocal(239, digits);
        return ExactRational(raw.floor_scaled_pow10(80), ExactInteger::pow10(80));
    }();
    return pi;
}

ExactRational two_pi_rational() { return ExactRational(2) * pi_rational(); }

HighPrecisionDecimal sqrt_pi_decimal(int digits) { return sqrt_decimal(pi_rational(), digits); }

HighPrecisionDecimal sqrt_two_pi_decimal(int digits) {
    return sqrt_decimal(two_pi_rational(), digits);
}

double half_log_two_pi() {
    static const double value = 0.5 * std::log(two_pi_rational().to_double());
    return value;
}

}  // namespace stirgamma
