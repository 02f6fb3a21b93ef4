#pragma once

#include "taub/arithmetic.hpp"
#include "taub/series.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace taub {

/// q(x + iy) sampled on x-levels (decreasing towards 1) times a uniform
/// y-grid on [center - B, center + B].
struct BoundaryGrid {
    double B = 0.0;
    double center = 0.0;
    /// Actual step, 2B / samples; never larger than the requested step.
    double dy = 0.0;
    std::vector<double> x_levels;
    std::vector<double> y;
    /// values[level][sample] = q(x_level + i y_sample)
    std::vector<std::vector<complex>> values;
    /// Horizon used at each level; zero for injected functions.
    std::vector<ExtendedNonnegative> level_horizons;
    /// x - 1 >= 1/ln(level horizon).
    std::vector<bool> coupling_ok;
    ExtendedNonnegative horizon = ExtendedNonnegative::exact(0);
    /// Source description ("ones", "injected:heaviside", ...).
    std::string source;
};

/// Evaluates q_N on the grid. Requires B > 0, dy <= pi/ln(horizon) and
/// strictly decreasing levels > 1; throws SamplingError for a coarse dy.
BoundaryGrid scan(const CoefficientSequence& seq, double B, double dy,
                  std::span<const double> x_levels, double center = 0.0);

/// Coupled schedule: L levels, N_j = horizon^{j/L}, x_j - 1 = 1/ln N_j, with
/// the sequence truncated at N_j on level j.
BoundaryGrid scan_coupled(const CoefficientSequence& seq, double B, double dy, int levels,
                          double center = 0.0);

std::vector<ExtendedNonnegative> coupled_horizons(const ExtendedNonnegative& horizon, int levels);

/// Grid of an arbitrary q-like function, for synthetic references.
BoundaryGrid scan_function(const std::function<complex(complex)>& q, const std::string& label,
                           double B, double dy, std::span<const double> x_levels,
                           double center = 0.0);

enum class Trend { bounded, decaying, growing, inconclusive };

std::string to_string(Trend trend);

/// What the windowed coefficients are taken of.
enum class GridTarget { quotient, series };

struct FourierDiagnostic {
    double B = 0.0;
    double center = 0.0;
    std::string window = "hann";
    int M = 0;
    std::vector<double> x_levels;
    /// coefficients[level][m + M]
    std::vector<std::vector<complex>> coefficients;
    /// max_m |c_m| over -M..M
    std::vector<double> sup_per_level;
    /// max |c_m| over the tail band m pi/B in [T/2, T], T = 1/(x - 1);
    /// NaN when the band is empty or clipped away by M.
    std::vector<double> band_sup;
    Trend classification = Trend::inconclusive;

    complex at(std::size_t level, int m) const { return coefficients[level][static_cast<std::size_t>(m + M)]; }
};

/// c_m(x) = (1/2B) sum_j w(y_j) g(x + i y_j) e^{i m pi (y_j - center)/B} dy
/// with a Hann window and the trapezoid rule, for m = -M..M.
/// Requires M <= (B/dy)/4.
FourierDiagnostic window_coeffs(const BoundaryGrid& grid, int M,
                                GridTarget target = GridTarget::quotient);

/// Heuristic trend over the last three band sups: drift within [0.5, 1.5]
/// is bounded, monotone fall below 0.2x is decaying, monotone rise above 2x
/// is growing.
Trend classify(std::span<const double> band_sup);

/// Hann window 0.5 (1 + cos(pi y / B)) on [-B, B].
double hann(double y, double B);

/// (1/2B) int_{-B}^{B} w(y) e^{-i omega y} dy, closed form (real, even).
double hann_transform(double omega, double B);

struct WindowOracle {
    complex series_part;
    complex quotient_part;
};

/// Windowed coefficient with sum and integral exchanged:
///   series part   sum_n a_n n^-x W(ln n - m pi/B)
///   quotient part sum_n a_n n^-x G(ln n - m pi/B), G the window transform of
///   1/(x + iy) by composite Gauss-Legendre.
/// Window centred at 0. The quotient part is left at zero unless requested.
WindowOracle window_coeffs_oracle(const CoefficientSequence& seq, double x, double B, int m,
                                  bool with_quotient = true);

struct PoleBoundReport {
    /// max_{n <= horizon} s(n)/n
    double M_N = 0.0;
    /// max over the grid of |q|(x - 1)/M at the level's horizon
    double worst_ratio = 0.0;
    bool holds = false;
};

/// |q(z)| <= M/(x - 1) over the grid.
PoleBoundReport pole_bound_check(const CoefficientSequence& seq, const BoundaryGrid& grid);

}  // namespace taub
