#pragma once

#include <iosfwd>
#include <string>

#include "chief/theorems.hpp"

namespace chief {

/// JSON document for a campaign report. Everything except the "timing" key
/// is deterministic for a fixed catalogue and caps.
std::string report_json(const CampaignReport& report);

/// Aligned table, one instance per row.
std::string report_table(const CampaignReport& report);

/// format is "json" or "table".
void emit_report(const CampaignReport& report, const std::string& format,
                 std::ostream& out);

std::string to_string(Tri t);

} // namespace chief
