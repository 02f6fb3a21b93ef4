#include "taub/boundary.hpp"

#include "taub/errors.hpp"
#include "taub/parallel.hpp"
#include "taub/tauberian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace taub {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kReseedInterval = 32;
constexpr std::uint64_t kMinChunk = 16384;
constexpr std::uint64_t kMaxChunks = 256;

struct YGrid {
    double step = 0.0;
    std::size_t half = 0;  // index of the centre sample
    std::vector<double> y;
};

YGrid make_y_grid(double B, double dy, double center)
{
    YGrid g;
    g.half = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(B / dy)));
    g.step = B / static_cast<double>(g.half);
    g.y.resize(2 * g.half + 1);
    for (std::size_t k = 0; k <= g.half; ++k) {
        const double offset = static_cast<double>(k) * g.step;
        g.y[g.half + k] = center + offset;
        g.y[g.half - k] = center - offset;
    }
    return g;
}

void validate_grid_args(double B, double dy, std::span<const double> x_levels)
{
    if (!(B > 0.0) || !std::isfinite(B)) throw DomainError("window half-width B must be positive");
    if (!(dy > 0.0) || !std::isfinite(dy)) throw DomainError("grid step dy must be positive");
    if (x_levels.empty()) throw DomainError("at least one x-level is required");
    for (std::size_t i = 0; i < x_levels.size(); ++i) {
        if (!(x_levels[i] > 1.0)) throw DomainError("x-levels must all exceed 1");
        if (i > 0 && !(x_levels[i] < x_levels[i - 1])) {
            throw DomainError("x-levels must be strictly decreasing");
        }
    }
}

void check_nyquist(double dy, const ExtendedNonnegative& horizon)
{
    const double ln_h = static_cast<double>(horizon.ln());
    if (!(ln_h > 0.0)) return;
    const double limit = kPi / ln_h;
    if (dy > limit) {
        throw SamplingError("grid step dy=" + std::to_string(dy) + " is too coarse for horizon " +
                            horizon.to_string() + "; need dy <= pi/ln(horizon) = " +
                            std::to_string(limit));
    }
}

bool coupled(double x, const ExtendedNonnegative& horizon)
{
    const double ln_h = static_cast<double>(horizon.ln());
    if (!(ln_h > 0.0)) return true;
    return (x - 1.0) * ln_h >= 1.0 - 1e-12;
}

// f(x + i y_j) for the samples y[first .. first + count), by phase recurrence
// per coefficient with an exact reseed every kReseedInterval samples.
std::vector<complex> dense_series_on_samples(std::span<const double> a, double x,
                                             std::span<const double> ys, double step)
{
    const std::size_t count = ys.size();
    const std::uint64_t n_max = a.size();
    const std::uint64_t chunk = std::max<std::uint64_t>(kMinChunk, (n_max + kMaxChunks - 1) / kMaxChunks);
    const std::uint64_t chunks = (n_max + chunk - 1) / chunk;
    std::vector<std::vector<double>> partial(chunks);

    parallel_for_chunks(chunks, [&](std::size_t c) {
        std::vector<double> acc(2 * count, 0.0);
        const std::uint64_t lo = c * chunk;
        const std::uint64_t hi = std::min(n_max, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (a[i] == 0.0) continue;
            const double ln_n = ln_index(i + 1);
            const double base = a[i] * std::exp(-x * ln_n);
            const double rot_re = std::cos(step * ln_n);
            const double rot_im = -std::sin(step * ln_n);
            double wr = 0.0;
            double wi = 0.0;
            for (std::size_t j = 0; j < count; ++j) {
                if (j % kReseedInterval == 0) {
                    const double phase = -ys[j] * ln_n;
                    wr = base * std::cos(phase);
                    wi = base * std::sin(phase);
                } else {
                    const double r = wr * rot_re - wi * rot_im;
                    wi = wr * rot_im + wi * rot_re;
                    wr = r;
                }
                acc[2 * j] += wr;
                acc[2 * j + 1] += wi;
            }
        }
        partial[c] = std::move(acc);
    });

    std::vector<complex> out(count, 0.0);
    for (const auto& p : partial) {
        for (std::size_t j = 0; j < count; ++j) out[j] += complex(p[2 * j], p[2 * j + 1]);
    }
    return out;
}

// q on every sample of the grid at one level.
std::vector<complex> level_values(const CoefficientSequence& seq, double x, const YGrid& g, double center)
{
    const std::size_t total = g.y.size();
    // centred at 0: evaluate y >= 0 and mirror with q(x - iy) = conj q(x + iy)
    const bool mirror = center == 0.0;
    const std::size_t first = mirror ? g.half : 0;
    const std::span<const double> ys(g.y.data() + first, total - first);

    std::vector<complex> f;
    if (seq.is_dense()) {
        f = dense_series_on_samples(seq.dense_values(), x, ys, g.step);
    } else {
        f.resize(ys.size());
        for (std::size_t j = 0; j < ys.size(); ++j) f[j] = eval_f(seq, {x, ys[j]}).value;
    }

    std::vector<complex> q(total);
    for (std::size_t j = 0; j < ys.size(); ++j) q[first + j] = f[j] / complex(x, ys[j]);
    if (mirror) {
        for (std::size_t k = 1; k <= g.half; ++k) q[g.half - k] = std::conj(q[g.half + k]);
    }
    return q;
}

BoundaryGrid empty_grid(double B, double center, const YGrid& g)
{
    BoundaryGrid grid;
    grid.B = B;
    grid.center = center;
    grid.dy = g.step;
    grid.y = g.y;
    return grid;
}

// 16-point Gauss-Legendre rule on [-1, 1] by Newton iteration.
struct GaussLegendre16 {
    std::array<double, 16> nodes{};
    std::array<double, 16> weights{};

    GaussLegendre16()
    {
        constexpr int n = 16;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            nodes[static_cast<std::size_t>(i)] = t;
            weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussLegendre16& gauss_legendre()
{
    static const GaussLegendre16 rule;
    return rule;
}

// (1/2B) int_{-B}^{B} w(y) e^{-i omega y} / (x + i y) dy
complex windowed_reciprocal(double omega, double x, double B)
{
    const auto& gl = gauss_legendre();
    const int panels = std::max(64, static_cast<int>(std::ceil(B * std::max(std::abs(omega), 1.0))));
    const double width = 2.0 * B / panels;
    complex total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = -B + (p + 0.5) * width;
        complex panel = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double y = mid + 0.5 * width * gl.nodes[i];
            panel += gl.weights[i] * hann(y, B) * std::polar(1.0, -omega * y) / complex(x, y);
        }
        total += 0.5 * width * panel;
    }
    return total / (2.0 * B);
}

double sinc(double u)
{
    if (std::abs(u) < 1e-4) return 1.0 - u * u / 6.0;
    return std::sin(u) / u;
}

}  // namespace

std::vector<ExtendedNonnegative> coupled_horizons(const ExtendedNonnegative& horizon, int levels)
{
    if (levels < 1) throw DomainError("coupled schedule needs at least one level");
    std::vector<ExtendedNonnegative> out;
    const long double log2_h = horizon.log2();
    for (int j = 1; j <= levels; ++j) {
        const long double e = log2_h * j / levels;
        ExtendedNonnegative n;
        const long double v = std::exp2(e);
        const long double r = std::roundl(v);
        if (e <= 100) {
            const long double pick = std::abs(v - r) <= 1e-9L * v ? r : std::floor(v);
            n = ExtendedNonnegative::exact(static_cast<u128>(pick));
        } else {
            n = ExtendedNonnegative::pow2(e);
        }
        if (n < ExtendedNonnegative::exact(2)) {
            throw DomainError("coupled schedule level " + std::to_string(j) +
                              " has horizon below 2; use fewer levels");
        }
        out.push_back(n);
    }
    return out;
}

BoundaryGrid scan(const CoefficientSequence& seq, double B, double dy,
                  std::span<const double> x_levels, double center)
{
    validate_grid_args(B, dy, x_levels);
    check_nyquist(dy, seq.horizon());
    const YGrid g = make_y_grid(B, dy, center);
    BoundaryGrid grid = empty_grid(B, center, g);
    grid.source = seq.rule();
    grid.horizon = seq.horizon();
    for (const double x : x_levels) {
        grid.x_levels.push_back(x);
        grid.level_horizons.push_back(seq.horizon());
        grid.coupling_ok.push_back(coupled(x, seq.horizon()));
        grid.values.push_back(level_values(seq, x, g, center));
    }
    return grid;
}

BoundaryGrid scan_coupled(const CoefficientSequence& seq, double B, double dy, int levels,
                          double center)
{
    const auto horizons = coupled_horizons(seq.horizon(), levels);
    std::vector<double> xs;
    for (const auto& n : horizons) xs.push_back(1.0 + 1.0 / static_cast<double>(n.ln()));
    validate_grid_args(B, dy, xs);
    check_nyquist(dy, seq.horizon());
    const YGrid g = make_y_grid(B, dy, center);
    BoundaryGrid grid = empty_grid(B, center, g);
    grid.source = seq.rule() + " coupled(L=" + std::to_string(levels) + ")";
    grid.horizon = seq.horizon();
    for (std::size_t j = 0; j < horizons.size(); ++j) {
        const CoefficientSequence level_seq = seq.truncated(horizons[j]);
        grid.x_levels.push_back(xs[j]);
        grid.level_horizons.push_back(horizons[j]);
        grid.coupling_ok.push_back(coupled(xs[j], horizons[j]));
        grid.values.push_back(level_values(level_seq, xs[j], g, center));
    }
    return grid;
}

BoundaryGrid scan_function(const std::function<complex(complex)>& q, const std::string& label,
                           double B, double dy, std::span<const double> x_levels, double center)
{
    validate_grid_args(B, dy, x_levels);
    const YGrid g = make_y_grid(B, dy, center);
    BoundaryGrid grid = empty_grid(B, center, g);
    grid.source = "injected:" + label;
    for (const double x : x_levels) {
        grid.x_levels.push_back(x);
        grid.level_horizons.push_back(ExtendedNonnegative::exact(0));
        grid.coupling_ok.push_back(true);
        std::vector<complex> row(g.y.size());
        for (std::size_t j = 0; j < g.y.size(); ++j) row[j] = q(complex(x, g.y[j]));
        grid.values.push_back(std::move(row));
    }
    return grid;
}

std::string to_string(Trend trend)
{
    switch (trend) {
    case Trend::bounded: return "bounded";
    case Trend::decaying: return "decaying";
    case Trend::growing: return "growing";
    case Trend::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

double hann(double y, double B)
{
    if (std::abs(y) >= B) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * y / B));
}

double hann_transform(double omega, double B)
{
    const double u = omega * B;
    if (std::abs(u) < 1e-3 || std::abs(std::abs(u) - kPi) < 1e-3) {
        return 0.5 * sinc(u) + 0.25 * sinc(u - kPi) + 0.25 * sinc(u + kPi);
    }
    return -0.5 * kPi * kPi * std::sin(u) / (u * (u * u - kPi * kPi));
}

FourierDiagnostic window_coeffs(const BoundaryGrid& grid, int M, GridTarget target)
{
    if (grid.values.empty() || grid.y.size() < 3) throw DomainError("window_coeffs needs a non-empty grid");
    if (M < 0) throw DomainError("M must be nonnegative");
    const double guard = grid.B / grid.dy / 4.0;
    if (M > guard) {
        throw SamplingError("M=" + std::to_string(M) + " exceeds the resolution guard (B/dy)/4 = " +
                            std::to_string(guard));
    }
    FourierDiagnostic d;
    d.B = grid.B;
    d.center = grid.center;
    d.M = M;
    d.x_levels = grid.x_levels;

    const std::size_t samples = grid.y.size();
    std::vector<double> weights(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double trap = (j == 0 || j + 1 == samples) ? 0.5 : 1.0;
        weights[j] = trap * hann(grid.y[j] - grid.center, grid.B) * grid.dy / (2.0 * grid.B);
    }

    for (std::size_t level = 0; level < grid.values.size(); ++level) {
        const double x = grid.x_levels[level];
        std::vector<complex> g(samples);
        for (std::size_t j = 0; j < samples; ++j) {
            g[j] = grid.values[level][j];
            if (target == GridTarget::series) g[j] *= complex(x, grid.y[j]);
        }
        std::vector<complex> coeffs(static_cast<std::size_t>(2 * M + 1));
        double sup = 0.0;
        for (int m = -M; m <= M; ++m) {
            complex c = 0.0;
            for (std::size_t j = 0; j < samples; ++j) {
                if (weights[j] == 0.0) continue;
                c += weights[j] * g[j] * std::polar(1.0, m * kPi * (grid.y[j] - grid.center) / grid.B);
            }
            coeffs[static_cast<std::size_t>(m + M)] = c;
            sup = std::max(sup, std::abs(c));
        }

        const double T = 1.0 / (x - 1.0);
        const double lo = std::ceil(grid.B * T / (2.0 * kPi));
        const double hi = std::floor(grid.B * T / kPi);
        double band = std::numeric_limits<double>::quiet_NaN();
        if (lo <= hi && hi <= M) {
            band = 0.0;
            for (int m = static_cast<int>(lo); m <= static_cast<int>(hi); ++m) {
                band = std::max(band, std::abs(coeffs[static_cast<std::size_t>(m + M)]));
            }
        }
        d.coefficients.push_back(std::move(coeffs));
        d.sup_per_level.push_back(sup);
        d.band_sup.push_back(band);
    }
    d.classification = classify(d.band_sup);
    return d;
}

Trend classify(std::span<const double> band_sup)
{
    if (band_sup.size() < 3) return Trend::inconclusive;
    const double s0 = band_sup[band_sup.size() - 3];
    const double s1 = band_sup[band_sup.size() - 2];
    const double s2 = band_sup[band_sup.size() - 1];
    if (!std::isfinite(s0) || !std::isfinite(s1) || !std::isfinite(s2) || !(s0 > 0.0)) {
        return Trend::inconclusive;
    }
    if (s1 > s0 && s2 > s1 && s2 >= 2.0 * s0) return Trend::growing;
    if (s1 < s0 && s2 < s1 && s2 <= 0.2 * s0) return Trend::decaying;
    const auto in_drift = [s0](double s) { return s / s0 >= 0.5 && s / s0 <= 1.5; };
    if (in_drift(s1) && in_drift(s2)) return Trend::bounded;
    return Trend::inconclusive;
}

WindowOracle window_coeffs_oracle(const CoefficientSequence& seq, double x, double B, int m,
                                  bool with_quotient)
{
    if (!(x > 1.0)) throw DomainError("evaluation requires x>1");
    if (!(B > 0.0)) throw DomainError("window half-width B must be positive");
    const double shift = m * kPi / B;
    WindowOracle out;
    const auto add = [&](double weight, double ln_n) {
        out.series_part += weight * hann_transform(ln_n - shift, B);
        if (with_quotient) out.quotient_part += weight * windowed_reciprocal(ln_n - shift, x, B);
    };
    if (seq.is_dense()) {
        const auto a = seq.dense_values();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) continue;
            const double ln_n = ln_index(i + 1);
            add(a[i] * std::exp(-x * ln_n), ln_n);
        }
    } else {
        for (const auto& t : seq.sparse_terms()) {
            if (t.value.is_zero()) continue;
            const long double log2_n = t.index.log2();
            const long double log2_mag =
                (t.value.log2() - log2_n) - static_cast<long double>(x - 1.0) * log2_n;
            add(static_cast<double>(std::exp2(log2_mag)), static_cast<double>(t.index.ln()));
        }
    }
    return out;
}

PoleBoundReport pole_bound_check(const CoefficientSequence& seq, const BoundaryGrid& grid)
{
    PoleBoundReport r;
    r.M_N = max_normalized_sum(seq, seq.horizon());
    for (std::size_t level = 0; level < grid.values.size(); ++level) {
        const ExtendedNonnegative& n = grid.level_horizons[level];
        const double bound = n.is_zero() ? r.M_N : max_normalized_sum(seq, n);
        const double x = grid.x_levels[level];
        for (const complex v : grid.values[level]) {
            const double scaled = std::abs(v) * (x - 1.0);
            const double ratio = bound > 0.0 ? scaled / bound : (scaled > 0.0 ? INFINITY : 0.0);
            r.worst_ratio = std::max(r.worst_ratio, ratio);
        }
    }
    r.holds = r.worst_ratio <= 1.0 + 1e-10;
    return r;
}

}  // namespace taub
