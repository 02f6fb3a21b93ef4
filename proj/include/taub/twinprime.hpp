#pragma once

#include "taub/series.hpp"

#include <cstdint>

namespace taub {

/// Number of primes p <= N with p + 2 prime. 2 <= N <= 1e8.
std::uint64_t pi2(std::uint64_t N);

/// psi_2(N) = sum_{n <= N} Lambda(n) Lambda(n + 2), prime powers included.
double psi2(std::uint64_t N);

struct TwinPrimeConstant {
    double value = 0.0;
    /// Largest prime bound P used; the product runs over odd primes p <= P.
    std::uint64_t truncation_prime = 0;
    /// Upper bound 2/(P - 1) on the omitted log-factor sum.
    double tail_bound = 0.0;
};

/// prod_{2 < p <= P} (1 - 1/(p-1)^2), accumulated as a sum of logs.
TwinPrimeConstant twin_prime_constant(std::uint64_t P);

/// int_2^N dt / ln^2 t by adaptive Simpson (absolute tolerance 1e-9).
/// li2(2) = 0; N < 2 is a DomainError.
double li2(double N);

/// D_2(z) = sum_{n <= N} Lambda(n) Lambda(n + 2) n^-z.
EvalResult D2_eval(ComplexPoint z, std::uint64_t N);
/// D_2(z)/z, the quotient fed to the boundary diagnostics.
EvalResult D2_quotient(ComplexPoint z, std::uint64_t N);

struct TwinPrimeReport {
    std::uint64_t N = 0;
    std::uint64_t pi2 = 0;
    double psi2 = 0.0;
    double C2 = 0.0;
    std::uint64_t C2_truncation_prime = 0;
    double C2_tail_bound = 0.0;
    double li2 = 0.0;
    /// pi2 / (2 C2 li2)
    double ratio_pi = 0.0;
    /// psi2 / (2 C2 N)
    double ratio_psi = 0.0;
    /// Empirical sieve constant pi2 ln^2 N / N.
    double pi2_sieve_constant = 0.0;
    /// N < 100: asymptotic comparisons carry no weight.
    bool small_n = false;
};

TwinPrimeReport twin_report(std::uint64_t N, std::uint64_t P);

}  // namespace taub
