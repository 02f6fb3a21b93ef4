#pragma once

#include <cstdint>
#include <vector>

namespace taub {

/// Largest sieve limit accepted: N <= 1e8 plus the two-step lookahead needed
/// by the twin-prime weights.
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'002;

/// flags[n] == 1 iff n is prime, for 0 <= n <= limit. Segmented sieve of
/// Eratosthenes; segments are sieved independently and in parallel.
std::vector<std::uint8_t> prime_flags(std::uint64_t limit);

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

/// Lambda(n) for 0 <= n <= limit (Lambda(0) = Lambda(1) = 0), natural log.
std::vector<double> von_mangoldt_table(std::uint64_t limit);

}  // namespace taub
