#include "taub/series.hpp"

#include "taub/errors.hpp"
#include "taub/summation.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace taub {

namespace {

constexpr std::uint64_t kLogTableSize = 1'000'000;
constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

const std::vector<double>& log_table()
{
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogTableSize + 1, 0.0);
        for (std::uint64_t n = 1; n <= kLogTableSize; ++n) t[n] = std::log(static_cast<double>(n));
        return t;
    }();
    return table;
}

void require_half_plane(ComplexPoint z)
{
    if (!(z.x > 1.0)) throw DomainError("evaluation requires x>1 (got x=" + std::to_string(z.x) + ")");
    if (!std::isfinite(z.y)) throw DomainError("evaluation requires a finite ordinate");
}

// a * n^-z for a log-domain (or exact) coefficient, formed in log2 first.
// (log2 a - log2 n) is separated from (x - 1) log2 n so x near 1 loses nothing.
complex sparse_term(const SparseTerm& t, ComplexPoint z)
{
    const long double log2_n = t.index.log2();
    const long double log2_mag = (t.value.log2() - log2_n) - static_cast<long double>(z.x - 1.0) * log2_n;
    const double mag = static_cast<double>(std::exp2(log2_mag));
    if (std::isinf(mag)) {
        throw OverflowError("term a_n n^-z at n=" + t.index.to_string() +
                            " exceeds the double range (log2 magnitude " +
                            std::to_string(static_cast<double>(log2_mag)) + ")");
    }
    const double phase = static_cast<double>(-static_cast<long double>(z.y) * log2_n * kLn2);
    return std::polar(mag, phase);
}

// s * n^-z with s and n as magnitudes.
complex scaled_power(const ExtendedNonnegative& s, const ExtendedNonnegative& n, ComplexPoint z)
{
    if (s.is_zero()) return 0.0;
    return sparse_term({n, s}, z);
}

long double ln_gap(const ExtendedNonnegative& lo, const ExtendedNonnegative& hi)
{
    if (lo.is_exact() && hi.is_exact()) {
        const long double diff = static_cast<long double>(hi.exact_value() - lo.exact_value());
        return std::log1p(diff / static_cast<long double>(lo.exact_value()));
    }
    return hi.ln() - lo.ln();
}

}  // namespace

double ln_index(std::uint64_t n)
{
    if (n <= kLogTableSize) return log_table()[n];
    return std::log(static_cast<double>(n));
}

complex expm1(complex w)
{
    const double a = w.real();
    const double b = w.imag();
    const double half_sin = std::sin(0.5 * b);
    const double re = std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin;
    const double im = std::exp(a) * std::sin(b);
    return {re, im};
}

EvalResult eval_f(const CoefficientSequence& seq, ComplexPoint z)
{
    require_half_plane(z);
    EvalResult result;
    result.horizon_used = seq.horizon();
    CompensatedComplexSum sum;
    double smallest = std::numeric_limits<double>::infinity();
    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) continue;
            const double ln_n = ln_index(i + 1);
            const double mag = a[i] * std::exp(-z.x * ln_n);
            const complex term = z.y == 0.0 ? complex(mag, 0.0) : std::polar(mag, -z.y * ln_n);
            sum += term;
            smallest = std::min(smallest, mag);
            ++result.terms_included;
        }
    } else {
        for (const auto& t : seq.sparse_terms()) {
            if (t.value.is_zero()) continue;
            const complex term = sparse_term(t, z);
            sum += term;
            smallest = std::min(smallest, std::abs(term));
            ++result.terms_included;
        }
    }
    result.value = sum.value();
    result.smallest_term_magnitude = result.terms_included > 0 ? smallest : 0.0;
    return result;
}

EvalResult eval_q(const CoefficientSequence& seq, ComplexPoint z)
{
    EvalResult r = eval_f(seq, z);
    r.value /= z.z();
    return r;
}

complex abel_rhs(const CoefficientSequence& seq, ComplexPoint z)
{
    require_half_plane(z);
    const complex zz = z.z();
    CompensatedComplexSum sum;
    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        const std::size_t n_max = a.size();
        if (n_max == 0) return 0.0;
        CompensatedSum s;
        complex power = 1.0;  // 1^-z
        for (std::size_t n = 1; n < n_max; ++n) {
            s += a[n - 1];
            const complex next = std::exp(-zz * ln_index(n + 1));
            sum += s.value() * (power - next);
            power = next;
        }
        s += a[n_max - 1];
        sum += s.value() * power;
        return sum.value() / zz;
    }
    // s is constant between consecutive sparse indices, so each run of
    // differences telescopes to s_k (n_k^-z - n_{k+1}^-z).
    const auto terms = seq.sparse_terms();
    ExtendedNonnegative s = ExtendedNonnegative::exact(0);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        s += terms[k].value;
        const ExtendedNonnegative& next = k + 1 < terms.size() ? terms[k + 1].index : seq.horizon();
        sum += scaled_power(s, terms[k].index, z) - scaled_power(s, next, z);
    }
    if (!terms.empty()) sum += scaled_power(s, seq.horizon(), z);
    return sum.value() / zz;
}

complex laplace_q(const CoefficientSequence& seq, ComplexPoint z)
{
    require_half_plane(z);
    const complex zz = z.z();
    CompensatedComplexSum sum;
    // piece [ln n, ln(n+1)): s(n) * int e^{-zt} dt = s(n) e^{-z ln n} (1 - e^{-z dt}) / z
    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        const std::size_t n_max = a.size();
        if (n_max == 0) return 0.0;
        CompensatedSum s;
        for (std::size_t n = 1; n < n_max; ++n) {
            s += a[n - 1];
            if (s.value() == 0.0) continue;
            const double dt = std::log1p(1.0 / static_cast<double>(n));
            sum += s.value() * std::exp(-zz * ln_index(n)) * -expm1(-zz * dt);
        }
        s += a[n_max - 1];
        // beyond ln N the truncated s is constant: int_{ln N}^inf e^{-zt} dt
        sum += s.value() * std::exp(-zz * ln_index(n_max));
        return sum.value() / zz;
    }
    const auto terms = seq.sparse_terms();
    ExtendedNonnegative s = ExtendedNonnegative::exact(0);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        s += terms[k].value;
        const ExtendedNonnegative& next = k + 1 < terms.size() ? terms[k + 1].index : seq.horizon();
        if (terms[k].index < next) {
            const double dt = static_cast<double>(ln_gap(terms[k].index, next));
            sum += scaled_power(s, terms[k].index, z) * -expm1(-zz * dt);
        }
    }
    if (!terms.empty()) sum += scaled_power(s, seq.horizon(), z);
    return sum.value() / zz;
}

}  // namespace taub
