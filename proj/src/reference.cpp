#include "taub/reference.hpp"

#include "taub/series.hpp"

#include <array>
#include <cmath>

namespace taub {

namespace {

constexpr int kDirectTerms = 64;

// B_{2k} / (2k)!, k = 1..14
constexpr std::array<double, 14> kBernoulliOverFactorial = {
    0.083333333333333333,
    -0.0013888888888888889,
    3.3068783068783069e-5,
    -8.2671957671957672e-7,
    2.0876756987868099e-8,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
    -8.9535174270375469e-23,
};

// sum_{n < N} n^-s + N^-s/2 + Euler-Maclaurin corrections, i.e. zeta(s)
// without its N^{1-s}/(s-1) term.
std::complex<double> zeta_regular_part(std::complex<double> s)
{
    std::complex<double> sum = 0.0;
    for (int n = 1; n < kDirectTerms; ++n) sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double ln_n = std::log(static_cast<double>(kDirectTerms));
    const std::complex<double> n_pow = std::exp(-s * ln_n);
    sum += 0.5 * n_pow;
    // T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) N^{-s-2k+1}
    std::complex<double> rising = s;
    std::complex<double> power = n_pow / static_cast<double>(kDirectTerms);
    for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
        sum += kBernoulliOverFactorial[k] * rising * power;
        const double j = 2.0 * static_cast<double>(k) + 1.0;
        rising *= (s + j) * (s + j + 1.0);
        power /= static_cast<double>(kDirectTerms) * kDirectTerms;
    }
    return sum;
}

}  // namespace

std::complex<double> zeta(std::complex<double> s)
{
    const double ln_n = std::log(static_cast<double>(kDirectTerms));
    return zeta_regular_part(s) + std::exp((1.0 - s) * ln_n) / (s - 1.0);
}

std::complex<double> zeta_minus_pole(std::complex<double> s)
{
    // N^{1-s}/(s-1) - 1/(s-1) = (e^w - 1)/(s-1), w = (1-s) ln N
    const double ln_n = std::log(static_cast<double>(kDirectTerms));
    const std::complex<double> w = (1.0 - s) * ln_n;
    const std::complex<double> ratio = std::abs(w) < 1e-8 ? std::complex<double>(1.0) + 0.5 * w
                                                            : expm1(w) / w;
    return zeta_regular_part(s) - ln_n * ratio;
}

}  // namespace taub
