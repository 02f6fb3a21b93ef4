#include "taub/twinprime.hpp"

#include "taub/arithmetic.hpp"
#include "taub/errors.hpp"
#include "taub/sieve.hpp"
#include "taub/summation.hpp"

#include <cmath>
#include <string>

namespace taub {

namespace {

constexpr std::uint64_t kMaxTwinN = 100'000'000;

void check_twin_range(std::uint64_t N, std::uint64_t lowest)
{
    if (N < lowest || N > kMaxTwinN) {
        throw ResourceError("N=" + std::to_string(N) + " outside [" + std::to_string(lowest) + ", " +
                            std::to_string(kMaxTwinN) + "]");
    }
}

double inverse_log_squared(double t)
{
    const double l = std::log(t);
    return 1.0 / (l * l);
}

double simpson(double a, double fa, double b, double fb, double fm)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double fa, double b, double fb, double fm, double whole,
                        double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = inverse_log_squared(lm);
    const double frm = inverse_log_squared(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

std::uint64_t pi2(std::uint64_t N)
{
    check_twin_range(N, 2);
    const auto flags = prime_flags(N + 2);
    std::uint64_t count = 0;
    for (std::uint64_t p = 3; p <= N; p += 2) {
        if (flags[p] && flags[p + 2]) ++count;
    }
    return count;
}

double psi2(std::uint64_t N)
{
    check_twin_range(N, 1);
    const auto weights = twin_weights(N);
    CompensatedSum s;
    for (const double w : weights.dense_values()) s += w;
    return s.value();
}

TwinPrimeConstant twin_prime_constant(std::uint64_t P)
{
    if (P < 3) throw DomainError("twin_prime_constant requires P >= 3");
    const auto primes = primes_up_to(P);
    CompensatedSum log_product;
    for (const std::uint32_t p : primes) {
        if (p == 2) continue;
        const double d = static_cast<double>(p) - 1.0;
        log_product += std::log1p(-1.0 / (d * d));
    }
    TwinPrimeConstant c;
    c.value = std::exp(log_product.value());
    c.truncation_prime = P;
    c.tail_bound = 2.0 / (static_cast<double>(P) - 1.0);
    return c;
}

double li2(double N)
{
    if (!(N >= 2.0) || !std::isfinite(N)) throw DomainError("li2 requires N >= 2");
    if (N == 2.0) return 0.0;
    // dyadic pieces keep the recursion shallow on long ranges
    CompensatedSum total;
    double a = 2.0;
    while (a < N) {
        const double b = std::min(2.0 * a, N);
        const double fa = inverse_log_squared(a);
        const double fb = inverse_log_squared(b);
        const double fm = inverse_log_squared(0.5 * (a + b));
        const double piece_tol = 1e-9 * (b - a) / (N - 2.0);
        total += adaptive_simpson(a, fa, b, fb, fm, simpson(a, fa, b, fb, fm), piece_tol, 50);
        a = b;
    }
    return total.value();
}

EvalResult D2_eval(ComplexPoint z, std::uint64_t N)
{
    check_twin_range(N, 1);
    return eval_f(twin_weights(N), z);
}

EvalResult D2_quotient(ComplexPoint z, std::uint64_t N)
{
    check_twin_range(N, 1);
    return eval_q(twin_weights(N), z);
}

TwinPrimeReport twin_report(std::uint64_t N, std::uint64_t P)
{
    check_twin_range(N, 3);
    TwinPrimeReport r;
    r.N = N;
    r.pi2 = pi2(N);
    r.psi2 = psi2(N);
    const auto c2 = twin_prime_constant(P);
    r.C2 = c2.value;
    r.C2_truncation_prime = c2.truncation_prime;
    r.C2_tail_bound = c2.tail_bound;
    r.li2 = li2(static_cast<double>(N));
    r.ratio_pi = static_cast<double>(r.pi2) / (2.0 * r.C2 * r.li2);
    r.ratio_psi = r.psi2 / (2.0 * r.C2 * static_cast<double>(N));
    const double ln_n = std::log(static_cast<double>(N));
    r.pi2_sieve_constant = static_cast<double>(r.pi2) * ln_n * ln_n / static_cast<double>(N);
    r.small_n = N < 100;
    return r;
}

}  // namespace taub
