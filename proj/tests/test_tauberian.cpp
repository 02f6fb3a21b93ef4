#include "taub/arithmetic.hpp"
#include "taub/errors.hpp"
#include "taub/series.hpp"
#include "taub/tauberian.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using taub::ExtendedNonnegative;
using taub::u128;

namespace {

ExtendedNonnegative E(std::uint64_t v) { return ExtendedNonnegative::from_u64(v); }

// sum_{j <= k} 2^(2^j + j), exactly.
u128 counterexample_sum(int k)
{
    u128 s = 0;
    for (int j = 1; j <= k; ++j) s += u128{1} << ((1u << j) + static_cast<unsigned>(j));
    return s;
}

}  // namespace

TEST_CASE("partial sums of a dense sequence")
{
    const auto seq = taub::von_mangoldt(1000);
    const std::vector<ExtendedNonnegative> points{E(1), E(10), E(100), E(1000)};
    const auto table = taub::partial_sums(seq, points);
    std::vector<double> prefix(1001, 0.0);
    for (std::uint64_t n = 1; n <= 1000; ++n) prefix[n] = prefix[n - 1] + seq.value_at(n);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto n = points[i].to_u64();
        CHECK(table.sums[i].to_double() == doctest::Approx(prefix[n]).epsilon(1e-12));
        CHECK(table.ratios[i] == doctest::Approx(prefix[n] / static_cast<double>(n)).epsilon(1e-12));
    }
    for (std::size_t i = 1; i < points.size(); ++i) CHECK(table.running_sup[i] >= table.running_sup[i - 1]);
    CHECK_FALSE(table.exact);
}

TEST_CASE("partial sums of an integer sequence stay exact")
{
    const auto table = taub::partial_sums(taub::ones(100), std::vector{E(7), E(100)});
    CHECK(table.exact);
    CHECK(table.sums[1].exact_value() == 100);
}

TEST_CASE("checkpoint validation")
{
    const auto seq = taub::ones(100);
    CHECK_THROWS_AS(taub::partial_sums(seq, std::vector{E(10), E(5)}), taub::RangeError);
    CHECK_THROWS_AS(taub::partial_sums(seq, std::vector{E(101)}), taub::RangeError);
    const auto cps = taub::default_checkpoints(taub::counterexample(6));
    CHECK(std::is_sorted(cps.begin(), cps.end()));
    CHECK(std::find(cps.begin(), cps.end(), ExtendedNonnegative::pow2(64)) != cps.end());
    CHECK(std::find(cps.begin(), cps.end(), E(65536)) != cps.end());
}

TEST_CASE("S(t) is e^-t s(e^t)")
{
    const auto seq = taub::ones(1000);
    CHECK(taub::S_of_t(seq, -1.0).value == 0.0);
    const double t = std::log(500.5);
    CHECK(taub::S_of_t(seq, t).value == doctest::Approx(500.0 / 500.5));
    CHECK_FALSE(taub::S_of_t(seq, t).tail);
    CHECK(taub::S_of_t(seq, 10.0).tail);
    CHECK(taub::S_of_t(seq, 10.0).value == doctest::Approx(1000.0 * std::exp(-10.0)));
    CHECK(taub::max_normalized_sum(seq, E(1000)) == 1.0);
}

TEST_CASE("sharpness: exact sums against 2^k N")
{
    for (int k = 1; k <= 6; ++k) {
        const auto r = taub::sharpness_check(k);
        CHECK(r.exact);
        CHECK(r.s_N.exact_value() == counterexample_sum(k));
        CHECK(r.lower_bound.exact_value() == (u128{1} << ((1u << k) + static_cast<unsigned>(k))));
        CHECK(r.holds);
        CHECK(r.ratio >= 1.0);
        CHECK(r.ratio <= 1.2);
    }
    CHECK(taub::sharpness_check(3).s_N.exact_value() == 2120);
    CHECK(taub::sharpness_check(3).lower_bound.exact_value() == 2048);
}

TEST_CASE("property: s_N / N roughly doubles from level to level")
{
    // k = 2 -> 3 only reaches 1.84, the lower terms still weigh in there
    double previous = 0.0;
    for (int k = 3; k <= 12; ++k) {
        const auto r = taub::sharpness_check(k);
        const double growth = taub::ratio(r.s_N, r.N);
        if (previous > 0.0) CHECK(growth / previous >= 1.9);
        previous = growth;
    }
}

TEST_CASE("property: the log bound chain holds for random sequences")
{
    std::mt19937_64 rng(99);
    std::exponential_distribution<double> heavy(0.1);
    for (int i = 0; i < 30; ++i) {
        std::vector<double> v(1000);
        for (auto& a : v) a = (rng() % 4 == 0) ? heavy(rng) : 0.0;
        const auto seq = taub::CoefficientSequence::dense(v);
        for (std::uint64_t N : {10ull, 100ull, 1000ull}) {
            const auto r = taub::log_bound_check(seq, E(N));
            REQUIRE(r.holds);
            REQUIRE(r.sigma_N <= std::exp(1.0) * r.f_at_xN * (1 + 1e-12));
        }
    }
}

TEST_CASE("log bound on the counterexample uses the sparse path")
{
    const auto r = taub::log_bound_check(taub::counterexample(6), ExtendedNonnegative::pow2(64));
    CHECK(r.holds);
    CHECK(r.s_N.exact_value() == counterexample_sum(6));
    CHECK(r.x_N == doctest::Approx(1.0 + 1.0 / (64 * std::log(2.0))));
}

TEST_CASE("real condition stays between the analytic bounds")
{
    const double ln2 = std::log(2.0);
    const double majorant = 1.0 / (ln2 * ln2) + std::pow(2.0, -1.0 / ln2) / ln2;
    CHECK(majorant == doctest::Approx(2.61).epsilon(0.01));
    for (int j = 1; j <= 20; ++j) {
        const double delta = std::ldexp(1.0, -j);
        const auto probe = taub::real_condition_probe(delta);
        CHECK(probe.majorant == doctest::Approx(majorant));
        CHECK(probe.scaled_value <= majorant);
        CHECK(probe.scaled_value >= 0.3);
        CHECK(probe.scaled_value >= probe.minorant);
        CHECK(probe.within);
        // the next term past k_max is negligible
        const double k = probe.k_max + 1;
        const double log2_next = std::ldexp(1.0, static_cast<int>(k)) * (-delta) + k;
        const double log2_value = std::log2(taub::eval_f(taub::counterexample(probe.k_max), {1.0 + delta, 0.0}).value.real());
        CHECK(log2_next - log2_value < std::log2(1e-18));
    }
}
