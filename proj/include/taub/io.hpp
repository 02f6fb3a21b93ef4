#pragma once

#include "taub/boundary.hpp"
#include "taub/tauberian.hpp"
#include "taub/twinprime.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace taub {

/// "%.17g", locale independent; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

/// Exact values up to 2^53 as JSON numbers; larger exact values as decimal
/// strings; log-domain values as "2^E" strings.
nlohmann::json to_json(const ExtendedNonnegative& v);
nlohmann::json to_json(const EvalResult& r);
nlohmann::json to_json(const LogBoundReport& r);
nlohmann::json to_json(const SharpnessReport& r);
nlohmann::json to_json(const TwinPrimeReport& r);
nlohmann::json to_json(const PoleBoundReport& r);
nlohmann::json to_json(const RealConditionProbe& r);

/// Columns N, s_N, ratio, running_sup.
void write_partial_sums_csv(std::ostream& out, const PartialSumTable& table);
/// Columns x, y, re_q, im_q.
void write_grid_csv(std::ostream& out, const BoundaryGrid& grid);
/// Columns x, m, re_c, im_c, classification.
void write_diagnostic_csv(std::ostream& out, const FourierDiagnostic& diag);

}  // namespace taub
