#pragma once

#include "taub/extended.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace taub {

/// Guard on dense sequence length (memory, not mathematics).
inline constexpr std::uint64_t kMaxDenseHorizon = 100'000'000;

/// Exact counterexample indices stop at k = 6 (n = 2^64); beyond that only
/// log2(n) is kept.
inline constexpr int kMaxCounterexampleK = 40;

struct SparseTerm {
    ExtendedNonnegative index;
    ExtendedNonnegative value;
};

/// Nonnegative Dirichlet coefficients a_1..a_N with truncation horizon N.
/// Dense sequences hold doubles; sparse ones hold (index, value) pairs with
/// strictly increasing indices. Immutable after construction.
class CoefficientSequence {
public:
    enum class Kind { dense, sparse };

    CoefficientSequence() = default;

    /// values[i] is a_{i+1}; the horizon is values.size().
    static CoefficientSequence dense(std::vector<double> values, std::string rule = "dense");
    static CoefficientSequence sparse(std::vector<SparseTerm> terms, ExtendedNonnegative horizon,
                                      std::string rule = "sparse");

    Kind kind() const { return kind_; }
    bool is_dense() const { return kind_ == Kind::dense; }
    const ExtendedNonnegative& horizon() const { return horizon_; }
    /// Rule name plus parameters, e.g. "counterexample(k_max=6)".
    const std::string& rule() const { return rule_; }

    std::span<const double> dense_values() const { return values_; }
    std::span<const SparseTerm> sparse_terms() const { return terms_; }

    /// a_n as a double (may be +inf for huge log-domain values); zero beyond
    /// the horizon.
    double value_at(std::uint64_t n) const;

    /// Requires an exact horizon <= kMaxDenseHorizon.
    CoefficientSequence to_dense() const;
    CoefficientSequence to_sparse() const;
    /// Drops every coefficient with index > horizon.
    CoefficientSequence truncated(const ExtendedNonnegative& horizon) const;

private:
    Kind kind_ = Kind::dense;
    ExtendedNonnegative horizon_ = ExtendedNonnegative::exact(0);
    std::string rule_;
    std::vector<double> values_;
    std::vector<SparseTerm> terms_;
};

CoefficientSequence ones(std::uint64_t horizon);
CoefficientSequence von_mangoldt(std::uint64_t horizon);
/// a_n = Lambda(n) * Lambda(n + 2).
CoefficientSequence twin_weights(std::uint64_t horizon);
/// a_n = 2^(2^k + k) at n = 2^(2^k), k = 1..k_max; zero elsewhere.
CoefficientSequence counterexample(int k_max);

/// Sparse text format: "index value" per line, '#' comments, value either a
/// nonnegative decimal or "2^E".
CoefficientSequence parse_coefficients(std::istream& in);
CoefficientSequence load_coefficients(const std::filesystem::path& path);
void write_coefficients(std::ostream& out, const CoefficientSequence& seq);

}  // namespace taub
