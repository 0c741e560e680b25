#include "doctest.h"

#include "stirgamma/constants.hpp"
#include "stirgamma/gamma.hpp"
#include "stirgamma/verify.hpp"

#include "log_oracle.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

using namespace stirgamma;
using testsupport::log_rational;

namespace {

const EvalConfig& default_config() {
    static const EvalConfig config = EvalConfig::make_default();
    return config;
}

double rel_error(std::complex<double> got, double expected) {
    return std::abs(got - std::complex<double>(expected, 0.0)) / std::fabs(expected);
}

}  // namespace

TEST_CASE("log gamma anchors") {
    const auto& config = default_config();

    // log Gamma(1/2) = (1/2) log pi.
    double half_log_pi = (log_rational(pi_rational(), 40) / ExactRational(2)).to_double();
    CHECK(rel_error(log_gamma({0.5, 0.0}, config).value, half_log_pi) < 1e-12);

    double log_9_factorial = log_rational(ExactRational(factorial(9)), 40).to_double();
    CHECK(rel_error(log_gamma({10.0, 0.0}, config).value, log_9_factorial) < 1e-12);

    CHECK(std::abs(log_gamma({1.0, 0.0}, config).value) < 1e-12);
}

TEST_CASE("gamma anchors") {
    const auto& config = default_config();

    CHECK(rel_error(gamma({5.0, 0.0}, config).value, 24.0) < 1e-12);

    double sqrt_pi = sqrt_pi_decimal(35).to_double();
    CHECK(rel_error(gamma({0.5, 0.0}, config).value, sqrt_pi) < 1e-12);

    double expected_3_5 = (half_integer_exact(3).r * sqrt_pi_decimal(35).to_rational()).to_double();
    CHECK(expected_3_5 == doctest::Approx(3.3233509704478426).epsilon(1e-12));
    CHECK(rel_error(gamma({3.5, 0.0}, config).value, expected_3_5) < 1e-12);
}

TEST_CASE("domain rejection is typed and precedes evaluation") {
    const auto& config = default_config();
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}, config), PoleError);
    CHECK_THROWS_AS(log_gamma({-1.0, 0.0}, config), std::domain_error);
    CHECK_THROWS_AS(log_gamma({-2.5, 3.0}, config), std::domain_error);
    CHECK_THROWS_AS(gamma({-7.0, 0.0}, config), std::domain_error);

    CHECK_THROWS_WITH_AS(log_gamma({-1.0, 0.0}, config),
                         doctest::Contains("outside supported sector"), std::domain_error);
}

TEST_CASE("gamma overflow carries the log-domain value") {
    const auto& config = default_config();
    try {
        gamma({200.0, 0.0}, config);
        FAIL("expected GammaOverflow");
    } catch (const GammaOverflow& e) {
        double expected = log_rational(ExactRational(factorial(199)), 40).to_double();
        CHECK(std::fabs(e.log_value().real() - expected) < 1e-10 * expected);
    }
}

TEST_CASE("recursion residual stays small") {
    const auto& config = default_config();
    CHECK(recursion_residual({1.0, 0.0}, config) < 1e-12);
    CHECK(recursion_residual({7.3, 0.0}, config) < 1e-10);
    CHECK(recursion_residual({2.0, 3.0}, config) < 1e-9);
}

TEST_CASE("functional equation over random arguments") {
    const auto& config = default_config();
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> re(0.5, 50.0);
    std::uniform_real_distribution<double> im(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        std::complex<double> z(re(rng), im(rng));
        CAPTURE(z.real());
        CAPTURE(z.imag());
        CHECK(recursion_residual(z, config) < 1e-10);
    }
}

TEST_CASE("integer and half-integer chains") {
    const auto& config = default_config();

    ExactInteger fact(1);
    for (int n = 2; n <= 20; ++n) {
        fact *= ExactInteger(n - 1);
        CHECK(rel_error(gamma({static_cast<double>(n), 0.0}, config).value, fact.to_double()) <
              1e-12);
    }

    const ExactRational sqrt_pi = sqrt_pi_decimal(35).to_rational();
    for (unsigned n = 0; n <= 10; ++n) {
        double expected = (half_integer_exact(n).r * sqrt_pi).to_double();
        CHECK(rel_error(gamma({n + 0.5, 0.0}, config).value, expected) < 1e-12);
    }
}

TEST_CASE("shift bookkeeping") {
    const auto& config = default_config();
    CHECK(log_gamma({0.5, 0.0}, config).shift_applied == 8);
    CHECK(log_gamma({8.0, 0.0}, config).shift_applied == 0);
    CHECK(log_gamma({7.99, 0.0}, config).shift_applied == 1);
    CHECK(log_gamma({3.0, 0.0}, config).shift_applied == 5);
    CHECK(log_gamma({25.0, 12.0}, config).shift_applied == 0);

    EvalConfig fixed = config;
    fixed.policy = TruncationPolicy::fixed(5, 30);
    EvalResult r = log_gamma({4.0, 1.0}, fixed);
    CHECK(r.terms_used == 5);
    CHECK(r.error_estimate > 0.0);

    EvalResult halfway = log_gamma({2.0, 0.0}, config);
    CHECK(halfway.terms_used <= config.policy.cap);

    EvalConfig bad = config;
    bad.shift_threshold = 0.25;
    CHECK_THROWS_AS(log_gamma({2.0, 0.0}, bad), std::invalid_argument);
}

TEST_CASE("shift threshold does not change the result") {
    EvalConfig eight = EvalConfig::make_default();
    EvalConfig twelve = EvalConfig::make_default();
    twelve.shift_threshold = 12.0;
    for (double z : {1.0, 1.5, 2.5, 7.0, 23.25, 50.0}) {
        std::complex<double> a = log_gamma({z, 0.0}, eight).value;
        std::complex<double> b = log_gamma({z, 0.0}, twelve).value;
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("conjugate symmetry of the full evaluation") {
    const auto& config = default_config();
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> re(0.6, 30.0);
    std::uniform_real_distribution<double> im(0.1, 15.0);
    for (int i = 0; i < 100; ++i) {
        std::complex<double> z(re(rng), im(rng));
        std::complex<double> a = gamma(std::conj(z), config).value;
        std::complex<double> b = std::conj(gamma(z, config).value);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    }
}
