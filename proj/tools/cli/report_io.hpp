#pragma once

// CSV and JSON forms of a StabilizationReport.

#include <string>

#include "json.hpp"
#include "padic/asymptotics.hpp"

namespace padic::cli {

/// One "# ..." comment line, then a header row and one row per sample.
std::string to_csv(const StabilizationReport& r);

nlohmann::json to_json(const StabilizationReport& r);
/// Inverse of to_json; throws std::runtime_error on malformed input.
StabilizationReport report_from_json(const nlohmann::json& j);

/// %.17g, enough digits to round-trip a double.
std::string fmt_double(double x);

}  // namespace padic::cli
