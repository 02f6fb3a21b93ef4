#include "taub/errors.hpp"
#include "taub/extended.hpp"
#include "taub/summation.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using taub::ExtendedNonnegative;
using taub::u128;

TEST_CASE("exact integers add and multiply exactly")
{
    const auto a = ExtendedNonnegative::from_u64(1'000'000'007);
    const auto b = ExtendedNonnegative::from_u64(998'244'353);
    CHECK((a + b).exact_value() == u128{1'998'244'360});
    CHECK((a * b).exact_value() == u128{1'000'000'007} * u128{998'244'353});
    CHECK((a * b).is_exact());
    CHECK(ExtendedNonnegative::exact(0).is_zero());
}

TEST_CASE("powers of two are exact up to the promotion limit")
{
    CHECK(ExtendedNonnegative::pow2(64).exact_value() == (u128{1} << 64));
    CHECK(ExtendedNonnegative::pow2(120).is_exact());
    CHECK_FALSE(ExtendedNonnegative::pow2(121).is_exact());
    CHECK_FALSE(ExtendedNonnegative::pow2(2.5L).is_exact());
    CHECK(ExtendedNonnegative::pow2(1000).log2() == 1000.0L);
    CHECK(ExtendedNonnegative::pow2(64).to_string() == "18446744073709551616");
}

TEST_CASE("products past 2^120 move to the log domain without losing magnitude")
{
    const auto big = ExtendedNonnegative::pow2(100);
    const auto prod = big * big;
    CHECK_FALSE(prod.is_exact());
    CHECK(prod.log2() == doctest::Approx(200.0).epsilon(1e-15));
    CHECK(std::isinf(prod.to_double()) == false);
    CHECK(prod.to_string().rfind("2^", 0) == 0);
    CHECK_THROWS_AS((void)prod.exact_value(), taub::RangeError);
}

TEST_CASE("mixed exact and log-domain sums")
{
    const auto big = ExtendedNonnegative::pow2(200);
    const auto sum = big + big;
    CHECK(sum.log2() == doctest::Approx(201.0).epsilon(1e-15));
    const auto near = ExtendedNonnegative::pow2(120) + ExtendedNonnegative::pow2(120);
    CHECK_FALSE(near.is_exact());
    CHECK(near.log2() == doctest::Approx(121.0).epsilon(1e-15));
    CHECK((ExtendedNonnegative::exact(0) + big) == big);
}

TEST_CASE("from_real")
{
    CHECK(ExtendedNonnegative::from_real(12.0).is_exact());
    CHECK(ExtendedNonnegative::from_real(12.0).exact_value() == 12);
    CHECK_FALSE(ExtendedNonnegative::from_real(0.5).is_exact());
    CHECK(ExtendedNonnegative::from_real(0.5).to_double() == doctest::Approx(0.5));
    CHECK_THROWS_AS(ExtendedNonnegative::from_real(-1.0), taub::ValidationError);
    CHECK(ExtendedNonnegative::from_real(0.0).is_zero());
}

TEST_CASE("ratio handles operands far outside double range")
{
    const auto a = ExtendedNonnegative::pow2(5000);
    const auto b = ExtendedNonnegative::pow2(4998);
    CHECK(taub::ratio(a, b) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(taub::ratio(ExtendedNonnegative::from_u64(3), ExtendedNonnegative::from_u64(4)) == 0.75);
}

TEST_CASE("property: ordering is preserved across representations")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(0.0, 200.0);
    int checked = 0;
    for (int i = 0; i < 10'000; ++i) {
        const long double ea = exponent(rng);
        const long double eb = (i % 5 == 0) ? ea : exponent(rng);
        // exact side when the exponent is an integer below 2^120
        const auto a = (i % 3 == 0 && ea < 120) ? ExtendedNonnegative::pow2(std::floor(ea))
                                                 : ExtendedNonnegative::from_log2(ea);
        const auto b = ExtendedNonnegative::from_log2(eb);
        const long double la = a.log2();
        const long double lb = b.log2();
        if (la < lb) CHECK(a < b);
        if (la > lb) CHECK(a > b);
        if (la == lb) CHECK(a == b);
        ++checked;
    }
    CHECK(checked == 10'000);
}

TEST_CASE("property: exact ordering agrees with integer ordering")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10'000; ++i) {
        const u128 a = (u128{rng()} << 56) ^ rng();
        const u128 b = (i % 7 == 0) ? a : ((u128{rng()} << 56) ^ rng());
        const auto ea = ExtendedNonnegative::exact(a);
        const auto eb = ExtendedNonnegative::exact(b);
        REQUIRE((ea < eb) == (a < b));
        REQUIRE((ea == eb) == (a == b));
    }
}

TEST_CASE("property: log2 round trip is within one ulp")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> exponent(-50.0, 1e6);
    for (int i = 0; i < 10'000; ++i) {
        const long double e = exponent(rng);
        const long double back = ExtendedNonnegative::from_log2(e).log2();
        const long double ulp = std::nextafter(std::fabs(e), std::numeric_limits<long double>::infinity()) - std::fabs(e);
        REQUIRE(std::fabs(back - e) <= ulp);
    }
}

TEST_CASE("compensated summation recovers cancelled digits")
{
    taub::CompensatedSum s;
    s += 1.0;
    for (int i = 0; i < 1000; ++i) s += 1e-16;
    s += -1.0;
    CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-10));
}
