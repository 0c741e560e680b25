#include "stirgamma/exact_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace stirgamma {

void ExactRational::normalize() {
    if (den_.is_zero()) throw std::domain_error("ExactRational: division by zero");
    if (num_.is_zero()) {
        den_ = ExactInteger(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    ExactInteger g = ExactInteger::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

ExactRational ExactRational::operator-() const {
    ExactRational out = *this;
    out.num_ = -out.num_;
    return out;
}

ExactRational ExactRational::abs() const {
    ExactRational out = *this;
    out.num_ = out.num_.abs();
    return out;
}

ExactRational ExactRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("ExactRational: division by zero");
    return ExactRational(den_, num_);
}

ExactRational ExactRational::operator+(const ExactRational& rhs) const {
    return ExactRational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

ExactRational ExactRational::operator-(const ExactRational& rhs) const {
    return ExactRational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

ExactRational ExactRational::operator*(const ExactRational& rhs) const {
    return ExactRational(num_ * rhs.num_, den_ * rhs.den_);
}

ExactRational ExactRational::operator/(const ExactRational& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("ExactRational: division by zero");
    return ExactRational(num_ * rhs.den_, den_ * rhs.num_);
}

ExactRational ExactRational::pow(const ExactRational& base, unsigned exponent) {
    return ExactRational(ExactInteger::pow(base.num_, exponent),
                         ExactInteger::pow(base.den_, exponent));
}

ExactInteger ExactRational::floor_scaled_pow10(unsigned k) const {
    if (sign() < 0) throw std::domain_error("floor_scaled_pow10: negative value");
    return (num_ * ExactInteger::pow10(k)) / den_;
}

std::string ExactRational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double ExactRational::to_double() const {
    if (num_.is_zero()) return 0.0;
    const auto na = num_.abs();
    // Shift the dividend so the integer quotient lands in [2^63, 2^65): enough
    // bits that the single final rounding dominates the floor truncation.
    const std::ptrdiff_t diff = static_cast<std::ptrdiff_t>(na.bit_length()) -
                                static_cast<std::ptrdiff_t>(den_.bit_length());
    const std::ptrdiff_t shift = 64 - diff;
    ExactInteger q = shift >= 0
                         ? (na << static_cast<std::size_t>(shift)) / den_
                         : na / (den_ << static_cast<std::size_t>(-shift));
    double mag = std::ldexp(q.to_double(), static_cast<int>(-shift));
    return num_.is_negative() ? -mag : mag;
}

ExactRational ExactRational::from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
    if (x == 0.0) return ExactRational();
    int exp = 0;
    double f = std::frexp(x, &exp);            // x = f * 2^exp, |f| in [0.5, 1)
    auto mant = static_cast<std::int64_t>(std::ldexp(f, 53));  // exact
    ExactInteger num(mant);
    int shift = 53 - exp;
    if (shift >= 0) return ExactRational(num, ExactInteger::pow2(static_cast<unsigned>(shift)));
    return ExactRational(num << static_cast<std::size_t>(-shift), ExactInteger(1));
}

ExactRational rational_arith(const ExactRational& a, const ExactRational& b, RationalOp op) {
    switch (op) {
        case RationalOp::add: return a + b;
        case RationalOp::sub: return a - b;
        case RationalOp::mul: return a * b;
        case RationalOp::div: return a / b;
    }
    throw std::invalid_argument("rational_arith: unknown operation");
}

}  // namespace stirgamma
