#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace taub {

using u128 = unsigned __int128;

/// Nonnegative magnitude that is either an exact integer (up to 2^120) or a
/// base-2 logarithm. Exact arithmetic promotes to the log domain once a
/// result would exceed 2^120, leaving headroom for accumulated sums.
class ExtendedNonnegative {
public:
    static constexpr int kPromotionBits = 120;

    ExtendedNonnegative() = default;

    static ExtendedNonnegative exact(u128 value);
    static ExtendedNonnegative from_u64(std::uint64_t value) { return exact(value); }
    /// 2^e; exact when e is an integer in [0, 120].
    static ExtendedNonnegative pow2(long double e);
    /// Log-domain value with the given log2 (may be -inf for zero).
    static ExtendedNonnegative from_log2(long double log2_value);
    /// Integral reals below 2^53 become exact, anything else is log-domain.
    static ExtendedNonnegative from_real(double value);

    bool is_exact() const { return exact_; }
    bool is_zero() const;
    /// Throws RangeError when the value is log-domain.
    u128 exact_value() const;
    /// Exact value as uint64 if it fits, throws RangeError otherwise.
    std::uint64_t to_u64() const;
    bool fits_u64() const;

    long double log2() const;
    long double ln() const;
    /// Nearest double; +inf when out of range.
    double to_double() const;

    /// Always log-domain.
    ExtendedNonnegative to_logdomain() const { return from_log2(log2()); }

    ExtendedNonnegative& operator+=(const ExtendedNonnegative& rhs);
    friend ExtendedNonnegative operator+(ExtendedNonnegative lhs, const ExtendedNonnegative& rhs)
    {
        lhs += rhs;
        return lhs;
    }
    friend ExtendedNonnegative operator*(const ExtendedNonnegative& lhs,
                                         const ExtendedNonnegative& rhs);

    friend std::partial_ordering operator<=>(const ExtendedNonnegative& lhs,
                                             const ExtendedNonnegative& rhs);
    friend bool operator==(const ExtendedNonnegative& lhs, const ExtendedNonnegative& rhs)
    {
        return (lhs <=> rhs) == std::partial_ordering::equivalent;
    }

    /// Decimal digits for exact values, "2^E" (E with 21 significant digits)
    /// for log-domain values.
    std::string to_string() const;

private:
    bool exact_ = true;
    u128 value_ = 0;
    long double log2_ = 0.0L;
};

/// lhs / rhs as a double, computed without overflow.
double ratio(const ExtendedNonnegative& lhs, const ExtendedNonnegative& rhs);

std::string u128_to_string(u128 value);

}  // namespace taub
