#pragma once

#include "taub/arithmetic.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>

namespace taub {

using complex = std::complex<double>;

struct ComplexPoint {
    double x = 2.0;
    double y = 0.0;

    complex z() const { return {x, y}; }
};

struct EvalResult {
    complex value;
    ExtendedNonnegative horizon_used;
    std::size_t terms_included = 0;
    /// Smallest |a_n n^-z| among the nonzero terms (0 when there are none).
    double smallest_term_magnitude = 0.0;
};

/// ln n, from a cached table for n <= 10^6.
double ln_index(std::uint64_t n);

/// f_N(z) = sum_{n <= N} a_n n^-z, ascending n, compensated summation.
/// Throws DomainError unless z.x > 1 and OverflowError when a log-domain
/// term leaves the double range.
EvalResult eval_f(const CoefficientSequence& seq, ComplexPoint z);

/// q_N(z) = f_N(z) / z.
EvalResult eval_q(const CoefficientSequence& seq, ComplexPoint z);

/// Abel-summation form (1/z)[sum_{n<N} s(n)(n^-z - (n+1)^-z) + s(N) N^-z].
complex abel_rhs(const CoefficientSequence& seq, ComplexPoint z);

/// Laplace form int_0^inf s(e^t) e^{-zt} dt, integrated exactly on each
/// interval where s(e^t) is constant.
complex laplace_q(const CoefficientSequence& seq, ComplexPoint z);

/// e^w - 1 without cancellation for small |w|.
complex expm1(complex w);

}  // namespace taub
