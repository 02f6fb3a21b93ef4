#include "taub/selftest.hpp"

#include "taub/boundary.hpp"
#include "taub/reference.hpp"
#include "taub/tauberian.hpp"
#include "taub/twinprime.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace taub {

namespace {

using Clock = std::chrono::steady_clock;

CheckOutcome timed(int id, std::string name, const std::function<bool(std::ostringstream&)>& body,
                   double budget_seconds)
{
    CheckOutcome out;
    out.id = id;
    out.name = std::move(name);
    std::ostringstream detail;
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << "exception: " << e.what();
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.seconds > budget_seconds) {
        detail << " runtime " << out.seconds << " s exceeds " << budget_seconds << " s;";
        ok = false;
    }
    out.passed = ok;
    out.detail = detail.str();
    return out;
}

std::vector<CoefficientSequence> generators(std::uint64_t horizon)
{
    std::vector<CoefficientSequence> out;
    out.push_back(ones(horizon));
    out.push_back(von_mangoldt(horizon));
    out.push_back(twin_weights(horizon));
    out.push_back(counterexample(6).truncated(ExtendedNonnegative::from_u64(horizon)));
    return out;
}

CoefficientSequence random_sequence(std::mt19937_64& rng, std::uint64_t horizon)
{
    std::uniform_int_distribution<int> kind(0, 3);
    std::vector<double> a(horizon, 0.0);
    switch (kind(rng)) {
    case 0: {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (auto& v : a) v = u(rng);
        break;
    }
    case 1: {
        // sparse spikes of size up to n log n
        std::bernoulli_distribution hit(0.01);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (hit(rng)) a[i] = u(rng) * static_cast<double>(i + 1) * std::log(static_cast<double>(i + 2));
        }
        break;
    }
    case 2: {
        std::exponential_distribution<double> e(1.0);
        for (auto& v : a) v = e(rng) * e(rng);
        break;
    }
    default: {
        std::uniform_real_distribution<double> p(-1.0, 1.0);
        const double power = p(rng);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::pow(static_cast<double>(i + 1), power);
        break;
    }
    }
    return CoefficientSequence::dense(std::move(a), "random");
}

bool relative_close(complex a, complex b, double tol)
{
    return std::abs(a - b) <= tol * std::abs(a) + 1e-300;
}

}  // namespace

CheckOutcome check_sharpness()
{
    return timed(2, "sharpness s_N >= N ln N / ln 2 at N = 2^(2^k), k = 1..6", [](std::ostringstream& d) {
        bool ok = true;
        for (int k = 1; k <= 6; ++k) {
            const auto r = sharpness_check(k);
            const bool pass = r.exact && r.holds && r.ratio >= 1.0 && r.ratio <= 1.2;
            ok = ok && pass;
            d << " k=" << k << " ratio=" << r.ratio << (pass ? "" : " FAIL") << ';';
        }
        return ok;
    }, 1.0);
}

CheckOutcome check_real_condition()
{
    return timed(3, "real condition: delta f(1+delta) in [0.3, 2.7], delta = 2^-j, j = 1..20",
                 [](std::ostringstream& d) {
                     bool ok = true;
                     double lo = INFINITY;
                     double hi = -INFINITY;
                     for (int j = 1; j <= 20; ++j) {
                         const auto p = real_condition_probe(std::ldexp(1.0, -j));
                         const bool pass = p.within && p.scaled_value >= 0.3 && p.scaled_value <= 2.7;
                         ok = ok && pass;
                         lo = std::min(lo, p.scaled_value);
                         hi = std::max(hi, p.scaled_value);
                         if (!pass) d << " j=" << j << " value=" << p.scaled_value << " FAIL;";
                     }
                     d << " range [" << lo << ", " << hi << "]";
                     return ok;
                 },
                 1.0);
}

CheckOutcome check_bound_chain()
{
    return timed(4, "bound chain sigma_N <= e f_N(1+1/ln N), s_N <= N sigma_N", [](std::ostringstream& d) {
        std::size_t failures = 0;
        std::size_t checks = 0;
        auto sequences = generators(10'000);
        std::mt19937_64 rng(20080703);
        for (int i = 0; i < 100; ++i) sequences.push_back(random_sequence(rng, 10'000));
        for (const auto& seq : sequences) {
            for (const std::uint64_t N : {100u, 1000u, 10000u}) {
                const auto r = log_bound_check(seq, ExtendedNonnegative::from_u64(N));
                ++checks;
                if (!r.holds) ++failures;
            }
        }
        d << ' ' << checks << " checks, " << failures << " failures";
        return failures == 0;
    }, 60.0);
}

CheckOutcome check_transform_identities()
{
    return timed(5, "eval_q = abel_rhs = laplace_q to 1e-11 relative", [](std::ostringstream& d) {
        double worst = 0.0;
        bool ok = true;
        for (const auto& seq : generators(10'000)) {
            for (int i = 0; i < 5; ++i) {
                for (int j = 0; j < 5; ++j) {
                    const ComplexPoint z{1.01 + (3.0 - 1.01) * i / 4.0, -20.0 + 40.0 * j / 4.0};
                    const complex q = eval_q(seq, z).value;
                    const complex a = abel_rhs(seq, z);
                    const complex l = laplace_q(seq, z);
                    const double scale = std::abs(q) + 1e-300;
                    worst = std::max({worst, std::abs(q - a) / scale, std::abs(q - l) / scale});
                    ok = ok && relative_close(q, a, 1e-11) && relative_close(q, l, 1e-11);
                }
            }
        }
        d << " worst relative deviation " << worst;
        return ok;
    }, 60.0);
}

CheckOutcome check_pole_bound()
{
    return timed(6, "pole bound |q| (x-1) <= M_N on coupled grids", [](std::ostringstream& d) {
        bool ok = true;
        const std::vector<CoefficientSequence> seqs = {ones(100'000), twin_weights(100'000), counterexample(6)};
        for (const auto& seq : seqs) {
            const auto grid = scan_coupled(seq, 10.0, 0.05, 4);
            const auto r = pole_bound_check(seq, grid);
            ok = ok && r.holds;
            d << ' ' << seq.rule() << " worst=" << r.worst_ratio << ';';
        }
        return ok;
    }, 60.0);
}

CheckOutcome check_boundary_contrast()
{
    return timed(7, "boundary contrast: bounded / growing / bounded / decaying", [](std::ostringstream& d) {
        constexpr double B = 10.0;
        constexpr double dy = 0.025;
        constexpr int M = 48;
        constexpr int L = 3;
        const auto horizon = ExtendedNonnegative::from_u64(1'000'000);
        std::vector<double> xs;
        for (const auto& n : coupled_horizons(horizon, L)) xs.push_back(1.0 + 1.0 / static_cast<double>(n.ln()));

        const auto report = [&](const std::string& label, const FourierDiagnostic& diag, Trend want) {
            const auto& s = diag.band_sup;
            const double first = s[s.size() - 3];
            d << ' ' << label << ": " << to_string(diag.classification) << " (band sup";
            for (const double v : s) d << ' ' << v / first;
            d << ");";
            return diag.classification == want;
        };

        bool ok = true;
        const auto flat = ones(1'000'000);
        ok = report("ones", window_coeffs(scan_coupled(flat, B, dy, L), M), Trend::bounded) && ok;
        const auto spikes = counterexample(6).truncated(horizon);
        ok = report("counterexample(6)", window_coeffs(scan_coupled(spikes, B, dy, L), M), Trend::growing) && ok;
        ok = report("heaviside",
                    window_coeffs(scan_function(heaviside_reference, "heaviside", B, dy, xs), M),
                    Trend::bounded) &&
             ok;
        ok = report("zeta-minus-pole",
                    window_coeffs(scan_function(zeta_minus_pole, "zeta-minus-pole", B, dy, xs), M,
                                  GridTarget::quotient),
                    Trend::decaying) &&
             ok;
        return ok;
    }, 60.0);
}

CheckOutcome check_hardy_littlewood()
{
    return timed(8, "Hardy-Littlewood ratios at N = 1e6", [](std::ostringstream& d) {
        const auto r = twin_report(1'000'000, 1'000'000);
        d << " pi2=" << r.pi2 << " ratio_pi=" << r.ratio_pi << " ratio_psi=" << r.ratio_psi;
        return r.ratio_pi > 0.98 && r.ratio_pi < 1.02 && r.ratio_psi > 0.95 && r.ratio_psi < 1.05;
    }, 10.0);
}

CheckOutcome check_diagnostic_oracle()
{
    return timed(9, "window_coeffs vs closed-form oracle, 1e-5 relative", [](std::ostringstream& d) {
        const auto seq = ones(1000);
        constexpr double B = 30.0;
        const double dy = std::min(M_PI / std::log(1000.0), B / 2048.0);
        double worst = 0.0;
        for (const double x : {1.5, 1.2}) {
            const std::vector<double> level{x};
            const auto diag = window_coeffs(scan(seq, B, dy, level), 8, GridTarget::series);
            for (int m = -8; m <= 8; ++m) {
                const complex want = window_coeffs_oracle(seq, x, B, m, false).series_part;
                worst = std::max(worst, std::abs(diag.at(0, m) - want) / std::abs(want));
            }
        }
        d << " worst relative deviation " << worst;
        return worst <= 1e-5;
    }, 60.0);
}

std::vector<CheckOutcome> run_selftest(const std::function<void(const CheckOutcome&)>& on_result)
{
    std::vector<CheckOutcome> out;
    for (const auto& check : {check_sharpness, check_real_condition, check_bound_chain,
                              check_transform_identities, check_pole_bound, check_boundary_contrast,
                              check_hardy_littlewood, check_diagnostic_oracle}) {
        out.push_back(check());
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace taub
