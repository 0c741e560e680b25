#include "doctest.h"

#include "stirgamma/bernoulli.hpp"
#include "stirgamma/constants.hpp"
#include "stirgamma/stirling_series.hpp"
#include "stirgamma/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace stirgamma;

namespace {

const StirlingSeries& series30() {
    static const StirlingSeries s = build_series(build_table(62), 31);
    return s;
}

}  // namespace

TEST_CASE("half-integer reference values") {
    CHECK(half_integer_exact(0).r == ExactRational(1));
    CHECK(half_integer_exact(1).r == ExactRational(1, 2));
    CHECK(half_integer_exact(3).r == ExactRational(15, 8));

    // r_{n+1} = r_n * (2n+1)/2, the functional equation restricted to half-integers.
    for (unsigned n = 0; n <= 20; ++n) {
        ExactRational step = half_integer_exact(n).r * ExactRational(2 * n + 1, 2);
        CHECK(step == half_integer_exact(n + 1).r);
    }
}

TEST_CASE("integer reference values") {
    CHECK(integer_exact(1) == ExactInteger(1));
    CHECK(integer_exact(5) == ExactInteger(24));
    CHECK(integer_exact(13) == ExactInteger(479001600));
    CHECK_THROWS_AS(integer_exact(0), std::domain_error);
    CHECK_THROWS_AS(integer_exact(-3), std::domain_error);
}

TEST_CASE("constant estimate at the first half-integer") {
    // With no correction terms, w = 3/2:
    //   C est = Gamma(3/2) / (w^1 e^-w) = (1/2) sqrt(pi) e^(3/2) / (3/2).
    CEstimate est = estimate_C(1, 0, series30());
    double expected = 0.5 * std::sqrt(std::acos(-1.0)) * std::exp(1.5) / 1.5;
    CHECK(est.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(est.value == doctest::Approx(2.6478622).epsilon(1e-6));
    CHECK(est.n == 1);
    CHECK(est.terms == 0);
}

TEST_CASE("estimate converges to sqrt(2 pi) as n grows") {
    const double root_two_pi = std::sqrt(2.0 * std::acos(-1.0));
    std::vector<unsigned> grid{5, 10, 20, 40};
    auto rows = convergence_study(grid, 0, series30());
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == grid[i]);
        CHECK(rows[i].deviation > 0.0);
        CHECK(rows[i].deviation ==
              doctest::Approx(std::fabs(rows[i].c_estimate - root_two_pi)).epsilon(1e-9));
        if (i > 0) {
            double ratio = rows[i].deviation / rows[i - 1].deviation;
            CHECK(rows[i].deviation < rows[i - 1].deviation);
            // Leading deviation is ~ C/(12 w): doubling n should roughly halve it.
            CHECK(ratio > 0.4);
            CHECK(ratio < 0.6);
        }
    }
}

TEST_CASE("estimate converges as correction terms are added") {
    double prev = -1.0;
    for (unsigned terms = 0; terms <= 3; ++terms) {
        auto rows = convergence_study({10}, terms, series30());
        REQUIRE(rows.size() == 1);
        if (terms > 0) CHECK(rows[0].deviation < prev);
        prev = rows[0].deviation;
    }
}

TEST_CASE("convergence study argument validation") {
    CHECK_THROWS_AS(estimate_C(0, 0, series30()), std::domain_error);
    CHECK_THROWS_AS(estimate_C(601, 0, series30()), std::domain_error);
    CHECK_THROWS_AS(estimate_C(5, 32, series30()), std::domain_error);
    CHECK_THROWS_AS(convergence_study({5, 5}, 0, series30()), std::invalid_argument);
    CHECK_THROWS_AS(convergence_study({10, 5}, 0, series30()), std::invalid_argument);

    auto single = convergence_study({1}, 0, series30());
    REQUIRE(single.size() == 1);
    CHECK(single[0].deviation > 0.0);
}
