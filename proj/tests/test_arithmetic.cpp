#include "oracles.hpp"

#include "taub/arithmetic.hpp"
#include "taub/errors.hpp"

#include <doctest.h>

#include <sstream>

using taub::ExtendedNonnegative;

TEST_CASE("generators")
{
    const auto one = taub::ones(10);
    CHECK(one.is_dense());
    CHECK(one.horizon() == ExtendedNonnegative::from_u64(10));
    CHECK(one.value_at(7) == 1.0);
    CHECK(one.value_at(11) == 0.0);

    const auto lambda = taub::von_mangoldt(1000);
    for (std::uint64_t n = 1; n <= 1000; ++n) REQUIRE(lambda.value_at(n) == doctest::Approx(oracle::lambda(n)));

    const auto twin = taub::twin_weights(1000);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        REQUIRE(twin.value_at(n) == doctest::Approx(oracle::lambda(n) * oracle::lambda(n + 2)));
    }
    CHECK(twin.value_at(1000) == 0.0);
    CHECK(twin.value_at(25) == doctest::Approx(std::log(5.0) * std::log(3.0)));
}

TEST_CASE("counterexample terms are exact through k = 6")
{
    const auto seq = taub::counterexample(6);
    CHECK_FALSE(seq.is_dense());
    CHECK(seq.rule() == "counterexample(k_max=6)");
    const auto terms = seq.sparse_terms();
    REQUIRE(terms.size() == 6);
    for (int k = 1; k <= 6; ++k) {
        const auto& t = terms[static_cast<std::size_t>(k - 1)];
        CHECK(t.index.is_exact());
        CHECK(t.index.exact_value() == (taub::u128{1} << (1u << k)));
        CHECK(t.value.log2() == static_cast<long double>((1 << k) + k));
    }
    CHECK(seq.horizon().exact_value() == (taub::u128{1} << 64));

    const auto far = taub::counterexample(10);
    CHECK_FALSE(far.sparse_terms().back().index.is_exact());
    CHECK(far.sparse_terms().back().index.log2() == 1024.0L);
    CHECK_THROWS_AS(taub::counterexample(0), taub::RangeError);
    CHECK_THROWS_AS(taub::counterexample(taub::kMaxCounterexampleK + 1), taub::RangeError);
}

TEST_CASE("dense and sparse conversions")
{
    const auto seq = taub::von_mangoldt(200);
    const auto sparse = seq.to_sparse();
    CHECK_FALSE(sparse.is_dense());
    const auto back = sparse.to_dense();
    for (std::uint64_t n = 1; n <= 200; ++n) REQUIRE(back.value_at(n) == doctest::Approx(seq.value_at(n)));

    const auto cut = seq.truncated(ExtendedNonnegative::from_u64(50));
    CHECK(cut.horizon() == ExtendedNonnegative::from_u64(50));
    CHECK(cut.value_at(49) == doctest::Approx(std::log(7.0)));
    CHECK(cut.value_at(53) == 0.0);

    const auto ce = taub::counterexample(6).truncated(ExtendedNonnegative::from_u64(300));
    CHECK(ce.sparse_terms().size() == 3);
}

TEST_CASE("invalid sequences are rejected")
{
    CHECK_THROWS_AS(taub::CoefficientSequence::dense({1.0, -0.5}), taub::ValidationError);
    CHECK_THROWS_AS(taub::ones(0), taub::ResourceError);
    CHECK_THROWS_AS(taub::ones(taub::kMaxDenseHorizon + 1), taub::ResourceError);
    std::vector<taub::SparseTerm> bad{{ExtendedNonnegative::from_u64(5), ExtendedNonnegative::from_u64(1)},
                                      {ExtendedNonnegative::from_u64(5), ExtendedNonnegative::from_u64(1)}};
    CHECK_THROWS_AS(taub::CoefficientSequence::sparse(bad, ExtendedNonnegative::from_u64(9)), taub::ValidationError);
}

TEST_CASE("coefficient file parsing")
{
    std::istringstream in("# a comment\n\n4 8\n16 2^6\n  256 2120.5\n2^64 2^70\n");
    const auto seq = taub::parse_coefficients(in);
    const auto terms = seq.sparse_terms();
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].value.exact_value() == 8);
    CHECK(terms[1].value.exact_value() == 64);
    CHECK_FALSE(terms[2].value.is_exact());
    CHECK(terms[2].value.to_double() == doctest::Approx(2120.5));
    CHECK(terms[3].index.exact_value() == (taub::u128{1} << 64));
    CHECK(seq.horizon() == terms[3].index);
}

TEST_CASE("parse errors name the offending line")
{
    const auto message = [](const std::string& text) {
        std::istringstream in(text);
        try {
            (void)taub::parse_coefficients(in);
        } catch (const taub::ValidationError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("1 1\n2 -3\n").find("line 2") != std::string::npos);
    CHECK(message("1 1\n\n1 2\n").find("line 3") != std::string::npos);
    CHECK(message("1.5 2\n").find("line 1") != std::string::npos);
    CHECK(message("3 abc\n").find("line 1") != std::string::npos);
    CHECK(message("3\n").find("line 1") != std::string::npos);
    CHECK(message("3 4 5\n").find("line 1") != std::string::npos);
    CHECK(message("0 4\n").find("line 1") != std::string::npos);
    CHECK_FALSE(message("# nothing\n").empty());
}

TEST_CASE("write then parse round trip")
{
    for (const auto& seq : {taub::counterexample(8), taub::twin_weights(500).to_sparse()}) {
        std::stringstream io;
        taub::write_coefficients(io, seq);
        const auto back = taub::parse_coefficients(io);
        REQUIRE(back.sparse_terms().size() == seq.sparse_terms().size());
        for (std::size_t i = 0; i < back.sparse_terms().size(); ++i) {
            const auto& a = seq.sparse_terms()[i];
            const auto& b = back.sparse_terms()[i];
            CHECK(a.index == b.index);
            CHECK(static_cast<double>(b.value.log2()) == doctest::Approx(static_cast<double>(a.value.log2())).epsilon(1e-15));
        }
    }
}
