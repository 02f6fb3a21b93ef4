#include "taub/extended.hpp"

#include "taub/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace taub {

namespace {

constexpr u128 kPromotionLimit = u128{1} << ExtendedNonnegative::kPromotionBits;
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

int bit_width(u128 v)
{
    int bits = 0;
    while (v != 0) {
        v >>= 1;
        ++bits;
    }
    return bits;
}

// log2(2^a + 2^b)
long double log2_add(long double a, long double b)
{
    if (a == -std::numeric_limits<long double>::infinity()) return b;
    if (b == -std::numeric_limits<long double>::infinity()) return a;
    const long double hi = std::max(a, b);
    const long double lo = std::min(a, b);
    return hi + std::log1p(std::exp2(lo - hi)) / kLn2;
}

}  // namespace

std::string u128_to_string(u128 value)
{
    if (value == 0) return "0";
    std::string digits;
    while (value != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

ExtendedNonnegative ExtendedNonnegative::exact(u128 value)
{
    if (value > kPromotionLimit) {
        return from_log2(std::log2(static_cast<long double>(value)));
    }
    ExtendedNonnegative r;
    r.exact_ = true;
    r.value_ = value;
    return r;
}

ExtendedNonnegative ExtendedNonnegative::pow2(long double e)
{
    if (e >= 0 && e <= kPromotionBits && std::floor(e) == e) {
        return exact(u128{1} << static_cast<int>(e));
    }
    return from_log2(e);
}

ExtendedNonnegative ExtendedNonnegative::from_log2(long double log2_value)
{
    if (std::isnan(log2_value) || log2_value == std::numeric_limits<long double>::infinity()) {
        throw ValidationError("log-domain magnitude must be finite or -inf");
    }
    ExtendedNonnegative r;
    r.exact_ = false;
    r.log2_ = log2_value;
    return r;
}

ExtendedNonnegative ExtendedNonnegative::from_real(double value)
{
    if (!(value >= 0.0) || std::isinf(value)) {
        throw ValidationError("coefficient value must be a finite nonnegative number");
    }
    if (std::floor(value) == value && value < 9007199254740992.0) {
        return exact(static_cast<u128>(value));
    }
    return from_log2(std::log2(static_cast<long double>(value)));
}

bool ExtendedNonnegative::is_zero() const
{
    return exact_ ? value_ == 0 : log2_ == -std::numeric_limits<long double>::infinity();
}

u128 ExtendedNonnegative::exact_value() const
{
    if (!exact_) throw RangeError("value " + to_string() + " is not held exactly");
    return value_;
}

bool ExtendedNonnegative::fits_u64() const
{
    return exact_ && value_ <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t ExtendedNonnegative::to_u64() const
{
    if (!fits_u64()) throw RangeError("value " + to_string() + " does not fit in 64 bits");
    return static_cast<std::uint64_t>(value_);
}

long double ExtendedNonnegative::log2() const
{
    if (!exact_) return log2_;
    if (value_ == 0) return -std::numeric_limits<long double>::infinity();
    return std::log2(static_cast<long double>(value_));
}

long double ExtendedNonnegative::ln() const
{
    if (exact_) {
        if (value_ == 0) return -std::numeric_limits<long double>::infinity();
        return std::log(static_cast<long double>(value_));
    }
    return log2_ * kLn2;
}

double ExtendedNonnegative::to_double() const
{
    if (exact_) return static_cast<double>(value_);
    return static_cast<double>(std::exp2(log2_));
}

ExtendedNonnegative& ExtendedNonnegative::operator+=(const ExtendedNonnegative& rhs)
{
    if (exact_ && rhs.exact_) {
        // both operands are <= 2^120, so the sum cannot wrap
        const u128 sum = value_ + rhs.value_;
        *this = exact(sum);
        return *this;
    }
    *this = from_log2(log2_add(log2(), rhs.log2()));
    return *this;
}

ExtendedNonnegative operator*(const ExtendedNonnegative& lhs, const ExtendedNonnegative& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) return ExtendedNonnegative::exact(0);
    if (lhs.exact_ && rhs.exact_ &&
        bit_width(lhs.value_) + bit_width(rhs.value_) <= ExtendedNonnegative::kPromotionBits + 1) {
        return ExtendedNonnegative::exact(lhs.value_ * rhs.value_);
    }
    return ExtendedNonnegative::from_log2(lhs.log2() + rhs.log2());
}

std::partial_ordering operator<=>(const ExtendedNonnegative& lhs, const ExtendedNonnegative& rhs)
{
    if (lhs.exact_ && rhs.exact_) return lhs.value_ <=> rhs.value_;
    return lhs.log2() <=> rhs.log2();
}

std::string ExtendedNonnegative::to_string() const
{
    if (exact_) return u128_to_string(value_);
    char buf[64];
    std::snprintf(buf, sizeof buf, "2^%.21Lg", log2_);
    return buf;
}

double ratio(const ExtendedNonnegative& lhs, const ExtendedNonnegative& rhs)
{
    if (rhs.is_zero()) throw DomainError("division by zero magnitude");
    if (lhs.is_exact() && rhs.is_exact()) {
        return static_cast<double>(static_cast<long double>(lhs.exact_value()) /
                                   static_cast<long double>(rhs.exact_value()));
    }
    return static_cast<double>(std::exp2(lhs.log2() - rhs.log2()));
}

}  // namespace taub
