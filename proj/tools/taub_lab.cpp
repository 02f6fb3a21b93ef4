// Command-line front end: sums, bound-check, eval, scan, twin, selftest.

#include "taub/boundary.hpp"
#include "taub/errors.hpp"
#include "taub/io.hpp"
#include "taub/parallel.hpp"
#include "taub/reference.hpp"
#include "taub/selftest.hpp"
#include "taub/tauberian.hpp"
#include "taub/twinprime.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kUsageError = 2;
constexpr int kComputationError = 1;

// Raised for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SequenceFlags {
    std::string gen;
    std::string file;
    std::uint64_t horizon = 1000;
    int k = 6;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--gen", gen, "generator: ones, von-mangoldt, twin, counterexample")
            ->check(CLI::IsMember({"ones", "von-mangoldt", "twin", "counterexample"}));
        cmd->add_option("--file", file, "sparse coefficient file ('index value' per line)");
        cmd->add_option("--horizon", horizon, "truncation horizon N (dense generators)");
        cmd->add_option("--k", k, "counterexample k_max");
    }

    bool given() const { return !gen.empty() || !file.empty(); }

    taub::CoefficientSequence build() const
    {
        if (gen.empty() == file.empty()) throw UsageError("exactly one of --gen or --file is required");
        if (!file.empty()) return taub::load_coefficients(file);
        if (gen == "ones") return taub::ones(horizon);
        if (gen == "von-mangoldt") return taub::von_mangoldt(horizon);
        if (gen == "twin") return taub::twin_weights(horizon);
        return taub::counterexample(k);
    }
};

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError("cannot parse list entry '" + item + "'");
        }
    }
    return out;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw taub::ValidationError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

json sequence_json(const taub::CoefficientSequence& seq)
{
    return {{"rule", seq.rule()}, {"horizon", taub::to_json(seq.horizon())}};
}

void emit_json(const std::string& path, const json& doc)
{
    Output out(path);
    out.stream() << doc.dump(2) << '\n';
}

int run_sums(const SequenceFlags& flags, const std::string& checkpoints, const std::string& out_path)
{
    const auto seq = flags.build();
    std::vector<taub::ExtendedNonnegative> points;
    if (checkpoints == "geometric") {
        points = taub::default_checkpoints(seq);
    } else {
        for (const double v : parse_list(checkpoints)) {
            if (!(v >= 1.0) || std::floor(v) != v) throw UsageError("checkpoints must be positive integers");
            points.push_back(taub::ExtendedNonnegative::from_u64(static_cast<std::uint64_t>(v)));
        }
    }
    const auto table = taub::partial_sums(seq, points);
    Output out(out_path);
    taub::write_partial_sums_csv(out.stream(), table);
    return 0;
}

int run_bound_check(const SequenceFlags& flags, std::optional<std::uint64_t> n_flag, const std::string& out_path)
{
    const auto seq = flags.build();
    json doc{{"command", "bound-check"}, {"sequence", sequence_json(seq)}};
    if (flags.gen == "counterexample") {
        const auto sharp = taub::sharpness_check(flags.k);
        const auto chain = taub::log_bound_check(seq, sharp.N);
        doc["k_max"] = flags.k;
        doc["N"] = taub::to_json(sharp.N);
        doc["s_N"] = taub::to_json(sharp.s_N);
        doc["bound"] = taub::to_json(sharp.lower_bound);
        doc["ratio"] = sharp.ratio;
        doc["exact"] = sharp.exact;
        doc["sharpness_holds"] = sharp.holds;
        doc["log_bound"] = taub::to_json(chain);
        doc["holds"] = sharp.holds && chain.holds;
    } else {
        const auto N = n_flag ? taub::ExtendedNonnegative::from_u64(*n_flag) : seq.horizon();
        const auto chain = taub::log_bound_check(seq, N);
        doc["log_bound"] = taub::to_json(chain);
        doc["holds"] = chain.holds;
    }
    emit_json(out_path, doc);
    return 0;
}

int run_eval(const SequenceFlags& flags, double x, double y, const std::string& out_path)
{
    const auto seq = flags.build();
    const taub::ComplexPoint z{x, y};
    const auto f = taub::eval_f(seq, z);
    const auto q = taub::eval_q(seq, z);
    const auto abel = taub::abel_rhs(seq, z);
    const auto laplace = taub::laplace_q(seq, z);
    const double scale = std::abs(q.value) + 1e-300;
    json doc{{"command", "eval"},
             {"sequence", sequence_json(seq)},
             {"x", x},
             {"y", y},
             {"f", taub::to_json(f)},
             {"q", taub::to_json(q)},
             {"abel_rhs", {{"re", abel.real()}, {"im", abel.imag()}}},
             {"laplace_q", {{"re", laplace.real()}, {"im", laplace.imag()}}},
             {"delta_abel", std::abs(q.value - abel) / scale},
             {"delta_laplace", std::abs(q.value - laplace) / scale}};
    emit_json(out_path, doc);
    return 0;
}

struct ScanFlags {
    double B = 30.0;
    std::optional<double> dy;
    std::string levels;
    int coupled = 0;
    std::optional<int> M;
    double center = 0.0;
    std::string inject;
    std::string grid_out;
    bool pole_bound = false;
};

int run_scan(const SequenceFlags& flags, const ScanFlags& s, const std::string& out_path)
{
    if (s.levels.empty() == (s.coupled == 0)) throw UsageError("exactly one of --levels or --coupled is required");
    if (!s.inject.empty() && flags.given()) throw UsageError("--inject replaces --gen/--file");

    taub::BoundaryGrid grid;
    std::optional<taub::CoefficientSequence> seq;
    if (s.inject.empty()) {
        seq = flags.build();
        const double ln_h = static_cast<double>(seq->horizon().ln());
        const double dy = s.dy.value_or(ln_h > 0 ? std::min(std::numbers::pi / ln_h, s.B / 2048.0) : s.B / 2048.0);
        grid = s.coupled > 0 ? taub::scan_coupled(*seq, s.B, dy, s.coupled, s.center)
                             : taub::scan(*seq, s.B, dy, parse_list(s.levels), s.center);
    } else {
        std::function<taub::complex(taub::complex)> fn;
        if (s.inject == "heaviside") {
            fn = taub::heaviside_reference;
        } else if (s.inject == "zeta-minus-pole") {
            fn = taub::zeta_minus_pole;
        } else {
            throw UsageError("--inject must be heaviside or zeta-minus-pole");
        }
        std::vector<double> xs;
        if (s.coupled > 0) {
            for (const auto& n : taub::coupled_horizons(taub::ExtendedNonnegative::from_u64(flags.horizon), s.coupled)) {
                xs.push_back(1.0 + 1.0 / static_cast<double>(n.ln()));
            }
        } else {
            xs = parse_list(s.levels);
        }
        grid = taub::scan_function(fn, s.inject, s.B, s.dy.value_or(s.B / 2048.0), xs, s.center);
    }

    int M = 64;
    if (s.M) {
        M = *s.M;
    } else {
        // reach the tail band of the level closest to 1
        const double T = 1.0 / (grid.x_levels.back() - 1.0);
        M = std::max(M, static_cast<int>(std::ceil(s.B * T / std::numbers::pi)));
    }
    const auto diag = taub::window_coeffs(grid, M);

    if (!s.grid_out.empty()) {
        Output g(s.grid_out);
        taub::write_grid_csv(g.stream(), grid);
    }
    Output out(out_path);
    taub::write_diagnostic_csv(out.stream(), diag);

    std::cerr << "source: " << grid.source << "\nclassification (heuristic): "
              << taub::to_string(diag.classification) << '\n';
    for (std::size_t i = 0; i < grid.x_levels.size(); ++i) {
        std::cerr << "  x=" << taub::format_double(grid.x_levels[i]) << " coupled=" << (grid.coupling_ok[i] ? "yes" : "no")
                  << " sup=" << taub::format_double(diag.sup_per_level[i])
                  << " band_sup=" << taub::format_double(diag.band_sup[i]) << '\n';
    }
    if (s.pole_bound && seq) {
        const auto r = taub::pole_bound_check(*seq, grid);
        std::cerr << "pole bound: " << taub::to_json(r).dump() << '\n';
    }
    return 0;
}

int run_twin(std::uint64_t N, std::optional<std::uint64_t> P, const std::string& out_path)
{
    const auto report = taub::twin_report(N, P.value_or(N));
    json doc = taub::to_json(report);
    doc["command"] = "twin";
    doc["P"] = P.value_or(N);
    emit_json(out_path, doc);
    return 0;
}

int run_selftest()
{
    bool all = true;
    taub::run_selftest([&](const taub::CheckOutcome& r) {
        all = all && r.passed;
        std::printf("[%s] criterion %d: %s (%.2f s)%s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    return all ? 0 : kComputationError;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical laboratory for Dirichlet series with nonnegative coefficients"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "worker cap (default: TAUB_LAB_THREADS or hardware)");

    std::string out_path = "-";
    SequenceFlags seq_flags;

    auto* sums = app.add_subcommand("sums", "partial-sum table (CSV)");
    std::string checkpoints = "geometric";
    seq_flags.attach(sums);
    sums->add_option("--checkpoints", checkpoints, "'geometric' or comma-separated integers");
    sums->add_option("--out", out_path, "output path, '-' for stdout");

    auto* bound = app.add_subcommand("bound-check", "log-bound chain and sharpness (JSON)");
    std::optional<std::uint64_t> bound_n;
    seq_flags.attach(bound);
    bound->add_option("--N", bound_n, "N for the bound chain (default: horizon)");
    bound->add_option("--out", out_path, "output path");

    auto* eval = app.add_subcommand("eval", "single-point evaluation with identity cross-checks (JSON)");
    double x = 2.0;
    double y = 0.0;
    seq_flags.attach(eval);
    eval->add_option("--x", x, "abscissa (> 1)");
    eval->add_option("--y", y, "ordinate");
    eval->add_option("--out", out_path, "output path");

    auto* scan = app.add_subcommand("scan", "boundary grid and windowed Fourier diagnostic (CSV)");
    ScanFlags scan_flags;
    seq_flags.attach(scan);
    scan->add_option("--B", scan_flags.B, "window half-width");
    scan->add_option("--dy", scan_flags.dy, "grid step (default min(pi/ln N, B/2048))");
    scan->add_option("--levels", scan_flags.levels, "comma-separated decreasing x-levels");
    scan->add_option("--coupled", scan_flags.coupled, "L coupled levels x_j - 1 = 1/ln(horizon^{j/L})");
    scan->add_option("--M", scan_flags.M, "coefficient range -M..M (default: reach the tail band)");
    scan->add_option("--center", scan_flags.center, "window centre on the y-axis");
    scan->add_option("--inject", scan_flags.inject, "synthetic q: heaviside or zeta-minus-pole");
    scan->add_option("--grid-out", scan_flags.grid_out, "grid CSV (x,y,re_q,im_q)");
    scan->add_flag("--pole-bound", scan_flags.pole_bound, "also report the pole bound on stderr");
    scan->add_option("--out", out_path, "diagnostic CSV (x,m,re_c,im_c,classification)");

    auto* twin = app.add_subcommand("twin", "twin-prime report (JSON)");
    std::uint64_t twin_n = 1'000'000;
    std::optional<std::uint64_t> twin_p;
    twin->add_option("--N", twin_n, "count range");
    twin->add_option("--P", twin_p, "prime bound for C2 (default N)");
    twin->add_option("--out", out_path, "output path");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suite; exit 0 iff all pass");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    if (threads > 0) taub::set_thread_count(threads);

    try {
        if (*sums) return run_sums(seq_flags, checkpoints, out_path);
        if (*bound) return run_bound_check(seq_flags, bound_n, out_path);
        if (*eval) return run_eval(seq_flags, x, y, out_path);
        if (*scan) return run_scan(seq_flags, scan_flags, out_path);
        if (*twin) return run_twin(twin_n, twin_p, out_path);
        if (*selftest) return run_selftest();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const taub::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kComputationError;
    }
    return kUsageError;
}
