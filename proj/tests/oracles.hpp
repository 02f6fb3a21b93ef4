#pragma once

// Slow, independent reference computations used as test oracles. Nothing here
// shares code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Plain, non-segmented sieve.
inline std::vector<bool> sieve(std::uint64_t limit)
{
    std::vector<bool> p(limit + 1, true);
    p[0] = false;
    if (limit >= 1) p[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!p[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) p[j] = false;
    }
    return p;
}

// Lambda(n) by trial factorisation.
inline double lambda(std::uint64_t n)
{
    if (n < 2) return 0.0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        return n == 1 ? std::log(static_cast<double>(d)) : 0.0;
    }
    return std::log(static_cast<double>(n));
}

// Twin pairs (p, p + 2) with p <= N, by brute force on a plain sieve.
inline std::uint64_t pi2(std::uint64_t N)
{
    const auto p = sieve(N + 2);
    std::uint64_t count = 0;
    for (std::uint64_t n = 3; n <= N; ++n) count += (p[n] && p[n + 2]) ? 1 : 0;
    return count;
}

// zeta through the alternating eta series with Borwein's acceleration.
inline std::complex<double> zeta(std::complex<double> s, int n = 60)
{
    using cl = std::complex<long double>;
    std::vector<long double> d(n + 1);
    long double term = 1.0L / n;
    long double sum = term;
    d[0] = sum * n;
    for (int i = 1; i <= n; ++i) {
        term *= static_cast<long double>(n + i - 1) * 4.0L * (n - i + 1) / ((2.0L * i - 1.0L) * (2.0L * i));
        sum += term;
        d[i] = sum * n;
    }
    const cl sl(s.real(), s.imag());
    cl eta = 0;
    for (int k = 0; k < n; ++k) {
        const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
        eta += sign * (d[k] - d[n]) * std::exp(-sl * std::log(static_cast<long double>(k + 1)));
    }
    eta /= -d[n];
    const cl result = eta / (1.0L - std::exp((1.0L - sl) * std::log(2.0L)));
    return {static_cast<double>(result.real()), static_cast<double>(result.imag())};
}

// li(x) = gamma + ln ln x + sum (ln x)^k / (k k!).
inline long double li(long double x)
{
    const long double L = std::log(x);
    long double term = 1.0L;
    long double sum = 0.0L;
    for (int k = 1; k < 400; ++k) {
        term *= L / k;
        const long double add = term / k;
        sum += add;
        if (add < 1e-22L * sum) break;
    }
    return 0.57721566490153286060651209L + std::log(L) + sum;
}

// int_2^N dt / ln^2 t = li(N) - li(2) - N/ln N + 2/ln 2 (integration by parts).
inline double li2(double N)
{
    const long double n = N;
    return static_cast<double>(li(n) - li(2.0L) - n / std::log(n) + 2.0L / std::log(2.0L));
}

// sum_{n<=N} a_n n^{-z} term by term with std::pow.
inline std::complex<double> dirichlet(const std::vector<double>& a, std::complex<double> z)
{
    std::complex<long double> sum = 0;
    const std::complex<long double> zl(z.real(), z.imag());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        sum += static_cast<long double>(a[i]) * std::pow(static_cast<long double>(i + 1), -zl);
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

}  // namespace oracle
