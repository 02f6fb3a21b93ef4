#include "taub/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace taub {

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json to_json(const ExtendedNonnegative& v)
{
    if (v.is_exact() && v.exact_value() <= (u128{1} << 53)) {
        return static_cast<std::uint64_t>(v.exact_value());
    }
    return v.to_string();
}

nlohmann::json to_json(const EvalResult& r)
{
    return {{"re", r.value.real()},
            {"im", r.value.imag()},
            {"horizon_used", to_json(r.horizon_used)},
            {"terms_included", r.terms_included},
            {"smallest_term_magnitude", r.smallest_term_magnitude}};
}

nlohmann::json to_json(const LogBoundReport& r)
{
    return {{"N", to_json(r.N)},
            {"x_N", r.x_N},
            {"sigma_N", r.sigma_N},
            {"f_at_xN", r.f_at_xN},
            {"s_N", to_json(r.s_N)},
            {"sigma_over_log", r.sigma_over_log},
            {"s_over_N_log", r.s_over_N_log},
            {"holds", r.holds}};
}

nlohmann::json to_json(const SharpnessReport& r)
{
    return {{"k", r.k},
            {"N", to_json(r.N)},
            {"s_N", to_json(r.s_N)},
            {"bound", to_json(r.lower_bound)},
            {"ratio", r.ratio},
            {"exact", r.exact},
            {"holds", r.holds}};
}

nlohmann::json to_json(const TwinPrimeReport& r)
{
    return {{"N", r.N},
            {"pi2", r.pi2},
            {"psi2", r.psi2},
            {"C2", r.C2},
            {"C2_truncation_prime", r.C2_truncation_prime},
            {"C2_tail_bound", r.C2_tail_bound},
            {"li2", r.li2},
            {"ratio_pi", r.ratio_pi},
            {"ratio_psi", r.ratio_psi},
            {"pi2_sieve_constant", r.pi2_sieve_constant},
            {"small_n", r.small_n}};
}

nlohmann::json to_json(const PoleBoundReport& r)
{
    return {{"M_N", r.M_N}, {"worst_ratio", r.worst_ratio}, {"holds", r.holds}};
}

nlohmann::json to_json(const RealConditionProbe& r)
{
    return {{"delta", r.delta},
            {"k_max", r.k_max},
            {"delta_f", r.scaled_value},
            {"majorant", r.majorant},
            {"minorant", r.minorant},
            {"within", r.within}};
}

void write_partial_sums_csv(std::ostream& out, const PartialSumTable& table)
{
    out << "N,s_N,ratio,running_sup\n";
    for (std::size_t j = 0; j < table.checkpoints.size(); ++j) {
        const auto& s = table.sums[j];
        const std::string s_text = s.is_exact() ? s.to_string() : format_double(s.to_double());
        out << table.checkpoints[j].to_string() << ',' << s_text << ','
            << format_double(table.ratios[j]) << ',' << format_double(table.running_sup[j]) << '\n';
    }
}

void write_grid_csv(std::ostream& out, const BoundaryGrid& grid)
{
    out << "x,y,re_q,im_q\n";
    for (std::size_t level = 0; level < grid.values.size(); ++level) {
        const std::string x = format_double(grid.x_levels[level]);
        for (std::size_t j = 0; j < grid.y.size(); ++j) {
            const complex v = grid.values[level][j];
            out << x << ',' << format_double(grid.y[j]) << ',' << format_double(v.real()) << ','
                << format_double(v.imag()) << '\n';
        }
    }
}

void write_diagnostic_csv(std::ostream& out, const FourierDiagnostic& diag)
{
    const std::string label = to_string(diag.classification);
    out << "x,m,re_c,im_c,classification\n";
    for (std::size_t level = 0; level < diag.coefficients.size(); ++level) {
        const std::string x = format_double(diag.x_levels[level]);
        for (int m = -diag.M; m <= diag.M; ++m) {
            const complex c = diag.at(level, m);
            out << x << ',' << m << ',' << format_double(c.real()) << ',' << format_double(c.imag())
                << ',' << label << '\n';
        }
    }
}

}  // namespace taub
