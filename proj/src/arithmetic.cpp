#include "taub/arithmetic.hpp"

#include "taub/errors.hpp"
#include "taub/sieve.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace taub {

namespace {

void check_dense_horizon(std::uint64_t horizon)
{
    if (horizon < 1 || horizon > kMaxDenseHorizon) {
        throw ResourceError("horizon " + std::to_string(horizon) + " outside [1, " +
                            std::to_string(kMaxDenseHorizon) + "]");
    }
}

ExtendedNonnegative parse_magnitude(const std::string& token, std::size_t line, bool allow_fraction)
{
    const auto fail = [&](const std::string& why) {
        return ValidationError("line " + std::to_string(line) + ": " + why + " ('" + token + "')");
    };
    if (token.empty()) throw fail("empty field");
    if (token[0] == '-') throw fail("negative value");
    if (token.rfind("2^", 0) == 0) {
        std::size_t used = 0;
        long double e = 0;
        try {
            e = std::stold(token.substr(2), &used);
        } catch (const std::exception&) {
            throw fail("malformed power of two");
        }
        if (used != token.size() - 2 || !std::isfinite(e)) throw fail("malformed power of two");
        return ExtendedNonnegative::pow2(e);
    }
    if (std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
        u128 v = 0;
        constexpr u128 limit = u128{1} << ExtendedNonnegative::kPromotionBits;
        for (const char c : token) {
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > limit) {
                return ExtendedNonnegative::from_log2(std::log2(std::stold(token)));
            }
        }
        return ExtendedNonnegative::exact(v);
    }
    if (!allow_fraction) throw fail("index must be a positive integer or 2^E");
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw fail("malformed number");
    }
    if (used != token.size()) throw fail("malformed number");
    if (!(v >= 0.0) || std::isinf(v)) throw fail("value must be finite and nonnegative");
    return ExtendedNonnegative::from_real(v);
}

std::string magnitude_token(const ExtendedNonnegative& v)
{
    if (v.is_exact()) return v.to_string();
    char buf[64];
    std::snprintf(buf, sizeof buf, "2^%.21Lg", v.log2());
    return buf;
}

}  // namespace

CoefficientSequence CoefficientSequence::dense(std::vector<double> values, std::string rule)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] >= 0.0) || std::isinf(values[i])) {
            throw ValidationError("coefficient a_" + std::to_string(i + 1) +
                                  " must be finite and nonnegative");
        }
    }
    CoefficientSequence seq;
    seq.kind_ = Kind::dense;
    seq.horizon_ = ExtendedNonnegative::from_u64(values.size());
    seq.rule_ = std::move(rule);
    seq.values_ = std::move(values);
    return seq;
}

CoefficientSequence CoefficientSequence::sparse(std::vector<SparseTerm> terms,
                                                ExtendedNonnegative horizon, std::string rule)
{
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].index < ExtendedNonnegative::exact(1)) {
            throw ValidationError("sparse index must be >= 1");
        }
        if (i > 0 && !(terms[i - 1].index < terms[i].index)) {
            throw ValidationError("sparse indices must be strictly increasing (entry " +
                                  std::to_string(i + 1) + ")");
        }
        if (horizon < terms[i].index) {
            throw ValidationError("sparse index " + terms[i].index.to_string() +
                                  " exceeds horizon " + horizon.to_string());
        }
    }
    CoefficientSequence seq;
    seq.kind_ = Kind::sparse;
    seq.horizon_ = horizon;
    seq.rule_ = std::move(rule);
    seq.terms_ = std::move(terms);
    return seq;
}

double CoefficientSequence::value_at(std::uint64_t n) const
{
    if (n == 0) return 0.0;
    if (is_dense()) return n <= values_.size() ? values_[n - 1] : 0.0;
    const auto key = ExtendedNonnegative::from_u64(n);
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                     [](const SparseTerm& t, const ExtendedNonnegative& k) {
                                         return t.index < k;
                                     });
    if (it == terms_.end() || !(it->index == key) || !it->index.is_exact()) return 0.0;
    return it->value.to_double();
}

CoefficientSequence CoefficientSequence::to_dense() const
{
    if (is_dense()) return *this;
    if (!horizon_.fits_u64()) {
        throw RangeError("horizon " + horizon_.to_string() + " cannot be held densely");
    }
    const std::uint64_t n_max = horizon_.to_u64();
    check_dense_horizon(n_max);
    std::vector<double> values(n_max, 0.0);
    for (const auto& t : terms_) {
        values[t.index.to_u64() - 1] = t.value.to_double();
    }
    return dense(std::move(values), rule_);
}

CoefficientSequence CoefficientSequence::to_sparse() const
{
    if (!is_dense()) return *this;
    std::vector<SparseTerm> terms;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] != 0.0) {
            terms.push_back({ExtendedNonnegative::from_u64(i + 1),
                             ExtendedNonnegative::from_real(values_[i])});
        }
    }
    return sparse(std::move(terms), horizon_, rule_);
}

CoefficientSequence CoefficientSequence::truncated(const ExtendedNonnegative& horizon) const
{
    if (horizon < ExtendedNonnegative::exact(1)) throw RangeError("horizon must be >= 1");
    if (is_dense()) {
        const std::uint64_t keep =
            horizon.fits_u64() ? std::min<std::uint64_t>(horizon.to_u64(), values_.size())
                               : values_.size();
        if (!(horizon < horizon_) && keep == values_.size()) return *this;
        std::vector<double> values(values_.begin(), values_.begin() + static_cast<long>(keep));
        return dense(std::move(values), rule_);
    }
    std::vector<SparseTerm> terms;
    for (const auto& t : terms_) {
        if (horizon < t.index) break;
        terms.push_back(t);
    }
    return sparse(std::move(terms), horizon < horizon_ ? horizon : horizon_, rule_);
}

CoefficientSequence ones(std::uint64_t horizon)
{
    check_dense_horizon(horizon);
    return CoefficientSequence::dense(std::vector<double>(horizon, 1.0), "ones");
}

CoefficientSequence von_mangoldt(std::uint64_t horizon)
{
    check_dense_horizon(horizon);
    auto table = von_mangoldt_table(horizon);
    std::vector<double> values(table.begin() + 1, table.end());
    return CoefficientSequence::dense(std::move(values), "von_mangoldt");
}

CoefficientSequence twin_weights(std::uint64_t horizon)
{
    check_dense_horizon(horizon);
    const auto table = von_mangoldt_table(horizon + 2);
    std::vector<double> values(horizon);
    for (std::uint64_t n = 1; n <= horizon; ++n) values[n - 1] = table[n] * table[n + 2];
    return CoefficientSequence::dense(std::move(values), "twin_weights");
}

CoefficientSequence counterexample(int k_max)
{
    if (k_max < 1 || k_max > kMaxCounterexampleK) {
        throw RangeError("counterexample k_max must lie in [1, " +
                         std::to_string(kMaxCounterexampleK) + "], got " + std::to_string(k_max));
    }
    std::vector<SparseTerm> terms;
    terms.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        const long double log2_index = std::ldexp(1.0L, k);
        terms.push_back({ExtendedNonnegative::pow2(log2_index),
                         ExtendedNonnegative::pow2(log2_index + k)});
    }
    const ExtendedNonnegative horizon = terms.back().index;
    return CoefficientSequence::sparse(std::move(terms), horizon,
                                       "counterexample(k_max=" + std::to_string(k_max) + ")");
}

CoefficientSequence parse_coefficients(std::istream& in)
{
    std::vector<SparseTerm> terms;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string index_token, value_token, extra;
        fields >> index_token >> value_token;
        if (value_token.empty() || (fields >> extra)) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected exactly two fields 'index value'");
        }
        SparseTerm term{parse_magnitude(index_token, line_no, false),
                        parse_magnitude(value_token, line_no, true)};
        if (term.index < ExtendedNonnegative::exact(1)) {
            throw ValidationError("line " + std::to_string(line_no) + ": index must be >= 1");
        }
        if (!terms.empty() && !(terms.back().index < term.index)) {
            throw ValidationError("line " + std::to_string(line_no) + ": index " +
                                  term.index.to_string() + " is not greater than the previous index");
        }
        terms.push_back(term);
    }
    if (terms.empty()) throw ValidationError("coefficient file contains no entries");
    const ExtendedNonnegative horizon = terms.back().index;
    return CoefficientSequence::sparse(std::move(terms), horizon, "file");
}

CoefficientSequence load_coefficients(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open coefficient file " + path.string());
    auto seq = parse_coefficients(in);
    return CoefficientSequence::sparse({seq.sparse_terms().begin(), seq.sparse_terms().end()},
                                       seq.horizon(), "file(" + path.filename().string() + ")");
}

void write_coefficients(std::ostream& out, const CoefficientSequence& seq)
{
    out << "# " << seq.rule() << " horizon=" << seq.horizon().to_string() << '\n';
    if (seq.is_dense()) {
        char buf[64];
        const auto values = seq.dense_values();
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (values[i] == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%zu %.17g\n", i + 1, values[i]);
            out << buf;
        }
        return;
    }
    for (const auto& t : seq.sparse_terms()) {
        out << magnitude_token(t.index) << ' ' << magnitude_token(t.value) << '\n';
    }
}

}  // namespace taub
