#include "stirgamma/exact_integer.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace stirgamma {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

ExactInteger::ExactInteger(std::int64_t v) {
    neg_ = v < 0;
    // Avoid overflow on INT64_MIN by negating in unsigned space.
    std::uint64_t mag = neg_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag));
        mag >>= 32;
    }
}

void ExactInteger::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

ExactInteger ExactInteger::from_string(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("ExactInteger: empty numeral");
    ExactInteger out;
    std::size_t i = 0;
    while (i < s.size()) {
        // Consume up to 9 digits at a time: out = out*10^k + chunk.
        std::size_t k = std::min<std::size_t>(9, s.size() - i);
        std::uint32_t chunk = 0, scale = 1;
        for (std::size_t j = 0; j < k; ++j) {
            char c = s[i + j];
            if (c < '0' || c > '9') throw std::invalid_argument("ExactInteger: bad digit");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        out.mul_add_small(scale, chunk);
        i += k;
    }
    out.neg_ = neg;
    out.trim();
    return out;
}

ExactInteger ExactInteger::pow10(unsigned k) {
    ExactInteger out(1);
    while (k >= 9) {
        out.mul_add_small(1000000000u, 0);
        k -= 9;
    }
    std::uint32_t rest = 1;
    for (unsigned i = 0; i < k; ++i) rest *= 10;
    out.mul_add_small(rest, 0);
    return out;
}

ExactInteger ExactInteger::pow2(unsigned k) { return ExactInteger(1) << k; }

std::size_t ExactInteger::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
}

ExactInteger ExactInteger::operator-() const {
    ExactInteger out = *this;
    if (!out.limbs_.empty()) out.neg_ = !out.neg_;
    return out;
}

ExactInteger ExactInteger::abs() const {
    ExactInteger out = *this;
    out.neg_ = false;
    return out;
}

int ExactInteger::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int ExactInteger::cmp(const ExactInteger& rhs) const {
    if (neg_ != rhs.neg_) return neg_ ? -1 : 1;
    int m = cmp_mag(limbs_, rhs.limbs_);
    return neg_ ? -m : m;
}

std::vector<std::uint32_t> ExactInteger::add_mag(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    out[hi.size()] = static_cast<std::uint32_t>(carry);
    return out;
}

std::vector<std::uint32_t> ExactInteger::sub_mag(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        borrow = d < 0 ? 1 : 0;
        out[i] = static_cast<std::uint32_t>(d + (borrow << 32));
    }
    return out;
}

std::vector<std::uint32_t> ExactInteger::mul_mag(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = ai * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        out[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    return out;
}

ExactInteger ExactInteger::operator+(const ExactInteger& rhs) const {
    ExactInteger out;
    if (neg_ == rhs.neg_) {
        out.limbs_ = add_mag(limbs_, rhs.limbs_);
        out.neg_ = neg_;
    } else {
        int m = cmp_mag(limbs_, rhs.limbs_);
        if (m == 0) return ExactInteger();
        if (m > 0) {
            out.limbs_ = sub_mag(limbs_, rhs.limbs_);
            out.neg_ = neg_;
        } else {
            out.limbs_ = sub_mag(rhs.limbs_, limbs_);
            out.neg_ = rhs.neg_;
        }
    }
    out.trim();
    return out;
}

ExactInteger ExactInteger::operator-(const ExactInteger& rhs) const { return *this + (-rhs); }

ExactInteger ExactInteger::operator*(const ExactInteger& rhs) const {
    ExactInteger out;
    out.limbs_ = mul_mag(limbs_, rhs.limbs_);
    out.neg_ = neg_ != rhs.neg_ && !out.limbs_.empty();
    out.trim();
    return out;
}

/*
 * Knuth Algorithm D (TAOCP 4.3.1) on base-2^32 limbs, following the classic
 * divmnu layout. u and v are magnitudes, v non-empty and not bigger than u.
 */
void ExactInteger::divmod_mag(const std::vector<std::uint32_t>& u,
                              const std::vector<std::uint32_t>& v,
                              std::vector<std::uint32_t>& q,
                              std::vector<std::uint32_t>& r) {
    const std::size_t m = u.size(), n = v.size();
    q.assign(m - n + 1, 0);
    if (n == 1) {
        std::uint64_t rem = 0;
        std::uint64_t d = v[0];
        for (std::size_t i = m; i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        r.assign(1, static_cast<std::uint32_t>(rem));
        return;
    }

    // Normalize so the top divisor limb has its high bit set.
    const int s = std::countl_zero(v[n - 1]);
    std::vector<std::uint32_t> vn(n), un(m + 1);
    for (std::size_t i = n; i-- > 1;)
        vn[i] = (v[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i - 1]) >> (32 - s)) : 0);
    vn[0] = v[0] << s;
    un[m] = s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[m - 1]) >> (32 - s)) : 0;
    for (std::size_t i = m; i-- > 1;)
        un[i] = (u[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i - 1]) >> (32 - s)) : 0);
    un[0] = u[0] << s;

    for (std::size_t j = m - n + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }

        // Multiply-subtract qhat*vn from un[j .. j+n].
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i];
            std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow -
                             static_cast<std::int64_t>(p & 0xFFFFFFFFull);
            un[i + j] = static_cast<std::uint32_t>(t);
            borrow = static_cast<std::int64_t>(p >> 32) - (t >> 32);
        }
        std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow;
        un[j + n] = static_cast<std::uint32_t>(t);

        if (t < 0) {
            // qhat was one too large; add the divisor back.
            --qhat;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = carry + un[i + j] + vn[i];
                un[i + j] = static_cast<std::uint32_t>(sum);
                carry = sum >> 32;
            }
            un[j + n] = static_cast<std::uint32_t>(un[j + n] + carry);
        }
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    // Denormalize the remainder.
    r.assign(n, 0);
    for (std::size_t i = 0; i < n - 1; ++i)
        r[i] = (un[i] >> s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - s)) : 0);
    r[n - 1] = un[n - 1] >> s;
}

std::pair<ExactInteger, ExactInteger> ExactInteger::divmod(const ExactInteger& lhs,
                                                           const ExactInteger& rhs) {
    if (rhs.is_zero()) throw std::domain_error("ExactInteger: division by zero");
    if (cmp_mag(lhs.limbs_, rhs.limbs_) < 0) return {ExactInteger(), lhs};
    ExactInteger q, r;
    divmod_mag(lhs.limbs_, rhs.limbs_, q.limbs_, r.limbs_);
    q.neg_ = lhs.neg_ != rhs.neg_;
    r.neg_ = lhs.neg_;
    q.trim();
    r.trim();
    return {q, r};
}

ExactInteger ExactInteger::operator/(const ExactInteger& rhs) const {
    return divmod(*this, rhs).first;
}

ExactInteger ExactInteger::operator%(const ExactInteger& rhs) const {
    return divmod(*this, rhs).second;
}

ExactInteger ExactInteger::operator<<(std::size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    const std::size_t whole = bits / 32, part = bits % 32;
    ExactInteger out;
    out.neg_ = neg_;
    out.limbs_.assign(limbs_.size() + whole + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t shifted = static_cast<std::uint64_t>(limbs_[i]) << part;
        out.limbs_[i + whole] |= static_cast<std::uint32_t>(shifted);
        out.limbs_[i + whole + 1] |= static_cast<std::uint32_t>(shifted >> 32);
    }
    out.trim();
    return out;
}

ExactInteger ExactInteger::operator>>(std::size_t bits) const {
    if (is_zero()) return *this;
    if (bits >= bit_length()) return ExactInteger();
    const std::size_t whole = bits / 32, part = bits % 32;
    ExactInteger out;
    out.neg_ = neg_;
    out.limbs_.assign(limbs_.size() - whole, 0);
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::uint64_t lo = limbs_[i + whole] >> part;
        std::uint64_t hi = (part && i + whole + 1 < limbs_.size())
                               ? static_cast<std::uint64_t>(limbs_[i + whole + 1]) << (32 - part)
                               : 0;
        out.limbs_[i] = static_cast<std::uint32_t>(lo | hi);
    }
    out.trim();
    return out;
}

ExactInteger ExactInteger::gcd(ExactInteger a, ExactInteger b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        ExactInteger r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ExactInteger ExactInteger::pow(const ExactInteger& base, unsigned exponent) {
    ExactInteger result(1), acc = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= acc;
        exponent >>= 1;
        if (exponent != 0) acc *= acc;
    }
    return result;
}

ExactInteger ExactInteger::isqrt(const ExactInteger& n) {
    if (n.is_negative()) throw std::domain_error("isqrt: negative argument");
    if (n.is_zero()) return ExactInteger();
    if (n.bit_length() <= 2) return ExactInteger(1);

    // Newton iteration x <- (x + n/x)/2 starting from a power of two >= sqrt(n).
    // The sequence decreases strictly until it reaches floor(sqrt(n)), so the
    // first non-decreasing step signals convergence.
    ExactInteger x = ExactInteger(1) << ((n.bit_length() + 1) / 2);
    while (true) {
        ExactInteger y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

void ExactInteger::mul_add_small(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : limbs_) {
        std::uint64_t t = static_cast<std::uint64_t>(limb) * mul + carry;
        limb = static_cast<std::uint32_t>(t);
        carry = t >> 32;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    trim();
}

std::uint32_t ExactInteger::divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::string ExactInteger::to_string() const {
    if (is_zero()) return "0";
    ExactInteger work = *this;
    std::string out;
    while (!work.is_zero()) {
        std::uint32_t chunk = work.divmod_small(1000000000u);
        if (work.is_zero()) {
            out.insert(0, std::to_string(chunk));
        } else {
            std::string part = std::to_string(chunk);
            out.insert(0, std::string(9 - part.size(), '0') + part);
        }
    }
    return neg_ ? "-" + out : out;
}

double ExactInteger::to_double() const {
    if (is_zero()) return 0.0;
    const std::size_t bits = bit_length();
    double mag;
    if (bits <= 64) {
        std::uint64_t v = limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        mag = static_cast<double>(v);
    } else {
        ExactInteger top = *this >> (bits - 64);
        std::uint64_t v = top.limbs_[0] | (static_cast<std::uint64_t>(top.limbs_[1]) << 32);
        mag = std::ldexp(static_cast<double>(v), static_cast<int>(bits - 64));
    }
    return neg_ ? -mag : mag;
}

ExactInteger factorial(unsigned n) {
    ExactInteger out(1);
    for (unsigned k = 2; k <= n; ++k) out.mul_add_small(k, 0);
    return out;
}

ExactInteger binomial(unsigned n, unsigned k) {
    if (k > n) return ExactInteger();
    if (k > n - k) k = n - k;
    ExactInteger out(1);
    for (unsigned i = 1; i <= k; ++i) {
        out.mul_add_small(n - k + i, 0);
        out = out / ExactInteger(static_cast<std::int64_t>(i));
    }
    return out;
}

}  // namespace stirgamma
