#pragma once

#include <complex>

namespace taub {

/// Riemann zeta by Euler-Maclaurin summation, s != 1, moderate |Im s|
/// (accurate to ~1e-14 for |s| <= 60).
std::complex<double> zeta(std::complex<double> s);

/// zeta(s) - 1/(s - 1), computed without cancellation near s = 1 (entire).
std::complex<double> zeta_minus_pole(std::complex<double> s);

/// 1/((x - 1) + iy): transform of the Heaviside step damped by e^{-(x-1)t}.
inline std::complex<double> heaviside_reference(std::complex<double> z)
{
    return 1.0 / (z - 1.0);
}

}  // namespace taub
