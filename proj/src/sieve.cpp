#include "taub/sieve.hpp"

#include "taub/errors.hpp"
#include "taub/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace taub {

namespace {

constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 18;

void check_limit(std::uint64_t limit)
{
    if (limit > kMaxSieveLimit) {
        throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds the memory guard " +
                            std::to_string(kMaxSieveLimit));
    }
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<std::uint32_t> simple_primes(std::uint64_t limit)
{
    std::vector<std::uint8_t> composite(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return primes;
}

}  // namespace

std::vector<std::uint8_t> prime_flags(std::uint64_t limit)
{
    check_limit(limit);
    std::vector<std::uint8_t> flags(limit + 1, 1);
    flags[0] = 0;
    if (limit >= 1) flags[1] = 0;
    const std::vector<std::uint32_t> base = simple_primes(isqrt(limit));

    const std::uint64_t segments = (limit + kSegmentSize) / kSegmentSize;
    parallel_for_chunks(segments, [&](std::size_t s) {
        const std::uint64_t low = s * kSegmentSize;
        const std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
        for (const std::uint32_t p : base) {
            const std::uint64_t pp = std::uint64_t{p} * p;
            if (pp > high) break;
            std::uint64_t start = std::max(pp, (low + p - 1) / p * p);
            for (std::uint64_t j = start; j <= high; j += p) flags[j] = 0;
        }
    });
    return flags;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit)
{
    const auto flags = prime_flags(limit);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (flags[n]) primes.push_back(static_cast<std::uint32_t>(n));
    }
    return primes;
}

std::vector<double> von_mangoldt_table(std::uint64_t limit)
{
    const auto flags = prime_flags(limit);
    std::vector<double> lambda(limit + 1, 0.0);
    const std::uint64_t root = isqrt(limit);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!flags[p]) continue;
        const double lp = std::log(static_cast<double>(p));
        lambda[p] = lp;
        if (p > root) continue;
        for (std::uint64_t pk = p * p; pk <= limit; pk *= p) {
            lambda[pk] = lp;
            if (pk > limit / p) break;
        }
    }
    return lambda;
}

}  // namespace taub
