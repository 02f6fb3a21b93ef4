#include "oracles.hpp"

#include "taub/errors.hpp"
#include "taub/parallel.hpp"
#include "taub/sieve.hpp"

#include <doctest.h>

TEST_CASE("prime flags match trial division across several segments")
{
    const std::uint64_t limit = 600'000;  // a little over two segments
    const auto flags = taub::prime_flags(limit);
    REQUIRE(flags.size() == limit + 1);
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 0; n <= limit; ++n) mismatches += (flags[n] != 0) != oracle::is_prime(n);
    CHECK(mismatches == 0);
}

TEST_CASE("tiny limits")
{
    CHECK(taub::primes_up_to(1).empty());
    CHECK(taub::primes_up_to(2) == std::vector<std::uint32_t>{2});
    CHECK(taub::primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(taub::primes_up_to(1'000'000).size() == 78'498);
}

TEST_CASE("von Mangoldt table against trial factorisation")
{
    const std::uint64_t limit = 100'000;
    const auto table = taub::von_mangoldt_table(limit);
    for (std::uint64_t n = 0; n <= limit; ++n) REQUIRE(table[n] == doctest::Approx(oracle::lambda(n)).epsilon(1e-15));
}

TEST_CASE("Chebyshev psi against a plain sieve")
{
    const std::uint64_t limit = 1'000'000;
    const auto table = taub::von_mangoldt_table(limit);
    const auto plain = oracle::sieve(limit);
    long double expected = 0.0L;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!plain[p]) continue;
        for (std::uint64_t q = p; q <= limit; q *= p) expected += std::log(static_cast<long double>(p));
    }
    long double got = 0.0L;
    for (const double v : table) got += v;
    CHECK(static_cast<double>(got) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
}

TEST_CASE("result does not depend on the thread count")
{
    const auto before = taub::thread_count();
    taub::set_thread_count(1);
    const auto one = taub::prime_flags(2'000'000);
    taub::set_thread_count(4);
    const auto four = taub::prime_flags(2'000'000);
    taub::set_thread_count(before);
    CHECK(one == four);
}

TEST_CASE("limit above the guard is rejected")
{
    CHECK_THROWS_AS(taub::prime_flags(taub::kMaxSieveLimit + 1), taub::ResourceError);
}
