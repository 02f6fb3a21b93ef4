#include "taub/tauberian.hpp"

#include "taub/errors.hpp"
#include "taub/series.hpp"
#include "taub/summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace taub {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Tolerance for comparing t against ln n when t was itself computed as a log.
constexpr double kLogSlack = 1e-14;

ExtendedNonnegative sparse_sum_upto(const CoefficientSequence& seq, const ExtendedNonnegative& n)
{
    ExtendedNonnegative s = ExtendedNonnegative::exact(0);
    for (const auto& t : seq.sparse_terms()) {
        if (n < t.index) break;
        s += t.value;
    }
    return s;
}

double dense_sum_upto(std::span<const double> a, std::uint64_t n)
{
    CompensatedSum s;
    for (std::uint64_t i = 0; i < n && i < a.size(); ++i) s += a[i];
    return s.value();
}

}  // namespace

PartialSumTable partial_sums(const CoefficientSequence& seq,
                             std::span<const ExtendedNonnegative> checkpoints)
{
    PartialSumTable table;
    for (std::size_t j = 0; j < checkpoints.size(); ++j) {
        if (checkpoints[j] < ExtendedNonnegative::exact(1)) {
            throw RangeError("checkpoints must be >= 1");
        }
        if (j > 0 && !(checkpoints[j - 1] < checkpoints[j])) {
            throw RangeError("checkpoints must be strictly increasing");
        }
        if (seq.horizon() < checkpoints[j]) {
            throw RangeError("checkpoint " + checkpoints[j].to_string() + " is beyond horizon " +
                             seq.horizon().to_string());
        }
    }
    table.checkpoints.assign(checkpoints.begin(), checkpoints.end());

    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        CompensatedSum s;
        std::uint64_t n = 0;
        for (const auto& cp : checkpoints) {
            const std::uint64_t target = cp.to_u64();
            for (; n < target; ++n) s += a[n];
            table.sums.push_back(ExtendedNonnegative::from_real(s.value()));
        }
    } else {
        const auto terms = seq.sparse_terms();
        ExtendedNonnegative s = ExtendedNonnegative::exact(0);
        std::size_t k = 0;
        for (const auto& cp : checkpoints) {
            for (; k < terms.size() && !(cp < terms[k].index); ++k) s += terms[k].value;
            table.sums.push_back(s);
        }
    }

    double sup = 0.0;
    for (std::size_t j = 0; j < checkpoints.size(); ++j) {
        table.exact = table.exact && table.sums[j].is_exact();
        table.ratios.push_back(ratio(table.sums[j], checkpoints[j]));
        sup = std::max(sup, table.ratios.back());
        table.running_sup.push_back(sup);
    }
    return table;
}

std::vector<ExtendedNonnegative> default_checkpoints(const CoefficientSequence& seq)
{
    std::set<u128> points;
    const u128 cap = seq.horizon().is_exact()
                         ? std::min<u128>(seq.horizon().exact_value(), u128{1} << 63)
                         : u128{1} << 63;
    for (int j = 0;; ++j) {
        const long double v = std::floor(std::pow(1.25L, j));
        if (v > static_cast<long double>(cap)) break;
        points.insert(static_cast<u128>(v));
    }
    std::vector<ExtendedNonnegative> out;
    for (const u128 p : points) out.push_back(ExtendedNonnegative::exact(p));
    if (!seq.is_dense()) {
        for (const auto& t : seq.sparse_terms()) out.push_back(t.index);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a < b; });
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

ExtendedNonnegative partial_sum(const CoefficientSequence& seq, const ExtendedNonnegative& n)
{
    if (seq.is_dense()) {
        const std::uint64_t limit = n.fits_u64() ? n.to_u64() : seq.dense_values().size();
        return ExtendedNonnegative::from_real(dense_sum_upto(seq.dense_values(), limit));
    }
    return sparse_sum_upto(seq, n);
}

double max_normalized_sum(const CoefficientSequence& seq, const ExtendedNonnegative& n)
{
    double best = 0.0;
    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        const std::uint64_t limit =
            n.fits_u64() ? std::min<std::uint64_t>(n.to_u64(), a.size()) : a.size();
        CompensatedSum s;
        for (std::uint64_t i = 0; i < limit; ++i) {
            s += a[i];
            best = std::max(best, s.value() / static_cast<double>(i + 1));
        }
        return best;
    }
    // between jumps s(n)/n decreases, so the maximum sits at a sparse index
    ExtendedNonnegative s = ExtendedNonnegative::exact(0);
    for (const auto& t : seq.sparse_terms()) {
        if (n < t.index) break;
        s += t.value;
        best = std::max(best, ratio(s, t.index));
    }
    return best;
}

ScaledSum S_of_t(const CoefficientSequence& seq, double t)
{
    if (t < 0.0) return {};
    ScaledSum out;
    const long double ln_horizon_plus_one =
        seq.horizon().is_exact()
            ? std::log1p(static_cast<long double>(seq.horizon().exact_value()))
            : seq.horizon().ln();
    out.tail = t > ln_horizon_plus_one;
    const double reach = t + kLogSlack * std::max(1.0, t);
    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        const double v = std::exp(reach);
        const std::uint64_t n =
            v >= static_cast<double>(a.size()) ? a.size() : static_cast<std::uint64_t>(std::floor(v));
        out.value = std::exp(-t) * dense_sum_upto(a, n);
        return out;
    }
    ExtendedNonnegative s = ExtendedNonnegative::exact(0);
    for (const auto& term : seq.sparse_terms()) {
        if (static_cast<double>(term.index.ln()) > reach) break;
        s += term.value;
    }
    out.value = s.is_zero() ? 0.0 : static_cast<double>(std::exp(s.ln() - t));
    return out;
}

LogBoundReport log_bound_check(const CoefficientSequence& seq, const ExtendedNonnegative& N)
{
    if (N < ExtendedNonnegative::exact(3)) throw DomainError("log_bound_check requires N >= 3");
    if (seq.horizon() < N) {
        throw RangeError("N = " + N.to_string() + " is beyond horizon " + seq.horizon().to_string());
    }
    LogBoundReport r;
    r.N = N;
    const double ln_n = static_cast<double>(N.ln());
    r.x_N = 1.0 + 1.0 / ln_n;

    CompensatedSum sigma;
    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        const std::uint64_t limit = N.to_u64();
        for (std::uint64_t n = 1; n <= limit; ++n) sigma += a[n - 1] / static_cast<double>(n);
    } else {
        for (const auto& t : seq.sparse_terms()) {
            if (N < t.index) break;
            sigma += ratio(t.value, t.index);
        }
    }
    r.sigma_N = sigma.value();
    r.f_at_xN = eval_f(seq.truncated(N), {r.x_N, 0.0}).value.real();
    r.s_N = partial_sum(seq, N);

    const double s_over_n = ratio(r.s_N, N);
    r.sigma_over_log = r.sigma_N / ln_n;
    r.s_over_N_log = s_over_n / ln_n;
    constexpr double slack = 1.0 + 1e-12;
    r.holds = r.sigma_N <= std::numbers::e * r.f_at_xN * slack && s_over_n <= r.sigma_N * slack;
    return r;
}

SharpnessReport sharpness_check(int k)
{
    const CoefficientSequence seq = counterexample(k);
    SharpnessReport r;
    r.k = k;
    r.N = seq.horizon();
    r.s_N = partial_sum(seq, r.N);
    r.lower_bound = r.N * ExtendedNonnegative::pow2(k);
    r.exact = r.s_N.is_exact() && r.lower_bound.is_exact();
    r.ratio = ratio(r.s_N, r.lower_bound);
    r.holds = !(r.s_N < r.lower_bound);
    return r;
}

RealConditionProbe real_condition_probe(double delta)
{
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("real_condition_probe requires 0 < delta < 1");
    RealConditionProbe p;
    p.delta = delta;

    // term_k = 2^{k - 2^k delta}: rises to a peak near 2^k delta = 1/ln 2, then
    // falls doubly exponentially.
    double running = 0.0;
    double previous = 0.0;
    int k = 1;
    for (;; ++k) {
        if (k > kMaxCounterexampleK) {
            throw RangeError("counterexample truncation did not converge within k_max = " +
                             std::to_string(kMaxCounterexampleK));
        }
        const double term = std::exp2(k - std::ldexp(delta, k));
        running += term;
        const double next = std::exp2((k + 1) - std::ldexp(delta, k + 1));
        if (term < previous && next < 1e-18 * running) break;
        previous = term;
    }
    p.k_max = k;
    p.scaled_value = delta * eval_f(counterexample(k), {1.0 + delta, 0.0}).value.real();
    p.majorant = 1.0 / (kLn2 * kLn2) + std::exp2(-1.0 / kLn2) / kLn2;
    p.minorant = std::exp2(-2.0 * delta) / (kLn2 * kLn2) - std::exp2(-1.0 / kLn2) / kLn2;
    p.within = p.scaled_value <= p.majorant && p.scaled_value >= p.minorant;
    return p;
}

}  // namespace taub
