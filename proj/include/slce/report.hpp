#pragma once

#include <iosfwd>
#include <string>

#include "slce/analysis.hpp"

namespace slce {

/// One JSON object per report; keys in schema order; no trailing newline.
std::string report_to_json(const AnalysisReport& rep);

/// Inverse of report_to_json (round-trips exactly). Throws InvalidArgs on
/// malformed input.
AnalysisReport report_from_json(const std::string& json_text);

/// Human-readable key/value block.
std::string report_to_text(const AnalysisReport& rep);

/// CSV dump of I_d over all units: header + one row per a in encoding order.
/// Columns: a,I_d,I_d_mod4,in_subgroup (mod4_only drops the raw value).
void write_jacobsthal_csv(std::ostream& out, const PrimePowerField& field,
                          const JacobsthalTable& table, bool mod4_only);

}  // namespace slce
