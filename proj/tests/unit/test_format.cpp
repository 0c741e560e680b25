#include "doctest.h"

#include "stirgamma/text_format.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <string>

using namespace stirgamma;

TEST_CASE("shortest form round-trips exactly") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> scale(-300, 300);
    for (int i = 0; i < 500; ++i) {
        double x = std::ldexp(mantissa(rng), scale(rng));
        std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(-0.0) == "-0");
}

TEST_CASE("display form suppresses rounding noise") {
    CHECK(format_double_display(23.999999999999993) == "24");
    CHECK(format_double_display(1.0) == "1");
    CHECK(format_double_display(0.041340695955152957) == "0.0413406959552");
}

TEST_CASE("complex rendering") {
    CHECK(format_complex({1.5, -2.25}) == "1.5-2.25i");
    CHECK(format_complex({24.0, 0.0}) == "24+0i");
    CHECK(format_complex({24.0, -0.0}) == "24+0i");
    CHECK(format_complex({-3.0, 7.0}) == "-3+7i");
    CHECK(format_complex_display({23.999999999999993, 0.0}) == "24+0i");
}

TEST_CASE("complex parsing") {
    auto plain = parse_complex("5");
    REQUIRE(plain.has_value());
    CHECK(plain->real() == 5.0);
    CHECK(plain->imag() == 0.0);

    auto pair = parse_complex("2,3");
    REQUIRE(pair.has_value());
    CHECK(pair->real() == 2.0);
    CHECK(pair->imag() == 3.0);

    auto negative = parse_complex("-1.5,-0.25");
    REQUIRE(negative.has_value());
    CHECK(negative->real() == -1.5);
    CHECK(negative->imag() == -0.25);

    CHECK_FALSE(parse_complex("abc").has_value());
    CHECK_FALSE(parse_complex("1,2,3").has_value());
    CHECK_FALSE(parse_complex("").has_value());
    CHECK_FALSE(parse_complex("4,").has_value());
    CHECK_FALSE(parse_complex("4x").has_value());
}

TEST_CASE("scalar parsing") {
    auto x = parse_double("2.5e-3");
    REQUIRE(x.has_value());
    CHECK(*x == 0.0025);
    CHECK_FALSE(parse_double("2.5 apples").has_value());
    CHECK_FALSE(parse_double("").has_value());
}
