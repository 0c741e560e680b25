#pragma once

#include "stirgamma/exact_integer.hpp"

#include <string>

namespace stirgamma {

/*
 * Exact rational number kept permanently in canonical form: denominator
 * positive, gcd(|num|, den) == 1, and zero stored as 0/1. Every constructor
 * and operator re-canonicalizes, so equality is plain member comparison.
 */
class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(std::int64_t v) : num_(v), den_(1) {}
    ExactRational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }
    ExactRational(ExactInteger num) : num_(std::move(num)), den_(1) {}
    ExactRational(ExactInteger num, ExactInteger den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const ExactInteger& num() const { return num_; }
    const ExactInteger& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    ExactRational operator-() const;
    ExactRational abs() const;
    // Multiplicative inverse; throws std::domain_error on zero.
    ExactRational reciprocal() const;

    ExactRational operator+(const ExactRational& rhs) const;
    ExactRational operator-(const ExactRational& rhs) const;
    ExactRational operator*(const ExactRational& rhs) const;
    // Throws std::domain_error when rhs is zero.
    ExactRational operator/(const ExactRational& rhs) const;

    ExactRational& operator+=(const ExactRational& rhs) { return *this = *this + rhs; }
    ExactRational& operator-=(const ExactRational& rhs) { return *this = *this - rhs; }
    ExactRational& operator*=(const ExactRational& rhs) { return *this = *this * rhs; }
    ExactRational& operator/=(const ExactRational& rhs) { return *this = *this / rhs; }

    bool operator==(const ExactRational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const ExactRational& rhs) const { return !(*this == rhs); }
    bool operator<(const ExactRational& rhs) const { return (*this - rhs).sign() < 0; }
    bool operator<=(const ExactRational& rhs) const { return (*this - rhs).sign() <= 0; }
    bool operator>(const ExactRational& rhs) const { return (*this - rhs).sign() > 0; }
    bool operator>=(const ExactRational& rhs) const { return (*this - rhs).sign() >= 0; }

    static ExactRational pow(const ExactRational& base, unsigned exponent);

    // floor(*this * 10^k) as an integer; requires a non-negative value.
    ExactInteger floor_scaled_pow10(unsigned k) const;

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;

    // Scales the quotient into a 64-bit window before rounding; error stays
    // within a couple of ulp across the full double exponent range.
    double to_double() const;

    // Exact dyadic rational of a finite double.
    static ExactRational from_double(double x);

private:
    ExactInteger num_;
    ExactInteger den_;

    void normalize();
};

enum class RationalOp { add, sub, mul, div };

ExactRational rational_arith(const ExactRational& a, const ExactRational& b, RationalOp op);

}  // namespace stirgamma
