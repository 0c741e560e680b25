#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stirgamma {

/*
 * Arbitrary-precision signed integer.
 *
 * Magnitude is a little-endian vector of base-2^32 limbs with no high zero
 * limbs; zero is the empty limb vector with non-negative sign, so every value
 * has exactly one representation and operator== can compare members directly.
 */
class ExactInteger {
public:
    ExactInteger() = default;
    ExactInteger(std::int64_t v);

    // Parses an optionally signed decimal string. Throws std::invalid_argument
    // on anything else (empty string, stray characters).
    static ExactInteger from_string(std::string_view s);
    static ExactInteger pow10(unsigned k);
    static ExactInteger pow2(unsigned k);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }
    bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }

    // Number of bits in the magnitude; 0 for zero.
    std::size_t bit_length() const;

    ExactInteger operator-() const;
    ExactInteger abs() const;

    ExactInteger operator+(const ExactInteger& rhs) const;
    ExactInteger operator-(const ExactInteger& rhs) const;
    ExactInteger operator*(const ExactInteger& rhs) const;
    // Quotient truncated toward zero, like built-in integer division.
    ExactInteger operator/(const ExactInteger& rhs) const;
    ExactInteger operator%(const ExactInteger& rhs) const;

    ExactInteger& operator+=(const ExactInteger& rhs) { return *this = *this + rhs; }
    ExactInteger& operator-=(const ExactInteger& rhs) { return *this = *this - rhs; }
    ExactInteger& operator*=(const ExactInteger& rhs) { return *this = *this * rhs; }

    // Truncated quotient and remainder in one pass; remainder takes the sign
    // of the dividend. Throws std::domain_error when rhs is zero.
    static std::pair<ExactInteger, ExactInteger> divmod(const ExactInteger& lhs,
                                                        const ExactInteger& rhs);

    ExactInteger operator<<(std::size_t bits) const;
    ExactInteger operator>>(std::size_t bits) const;

    bool operator==(const ExactInteger& rhs) const {
        return neg_ == rhs.neg_ && limbs_ == rhs.limbs_;
    }
    bool operator!=(const ExactInteger& rhs) const { return !(*this == rhs); }
    bool operator<(const ExactInteger& rhs) const { return cmp(rhs) < 0; }
    bool operator<=(const ExactInteger& rhs) const { return cmp(rhs) <= 0; }
    bool operator>(const ExactInteger& rhs) const { return cmp(rhs) > 0; }
    bool operator>=(const ExactInteger& rhs) const { return cmp(rhs) >= 0; }

    // -1, 0, +1 according to *this <=> rhs.
    int cmp(const ExactInteger& rhs) const;

    static ExactInteger gcd(ExactInteger a, ExactInteger b);
    static ExactInteger pow(const ExactInteger& base, unsigned exponent);

    // Floor of the square root; throws std::domain_error for negative input.
    static ExactInteger isqrt(const ExactInteger& n);

    std::string to_string() const;
    // Round-trips through the top 64 magnitude bits; accurate to ~1 ulp.
    double to_double() const;

private:
    std::vector<std::uint32_t> limbs_;
    bool neg_ = false;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u,
                           const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r);
    void mul_add_small(std::uint32_t mul, std::uint32_t add);
    std::uint32_t divmod_small(std::uint32_t d);

    friend ExactInteger factorial(unsigned n);
    friend ExactInteger binomial(unsigned n, unsigned k);
};

// n! by repeated multiplication.
ExactInteger factorial(unsigned n);

// Binomial coefficient C(n, k).
ExactInteger binomial(unsigned n, unsigned k);

}  // namespace stirgamma
