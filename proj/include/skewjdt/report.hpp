#pragma once

#include <string>

#include "json.hpp"
#include "skewjdt/bijections.hpp"
#include "skewjdt/verify.hpp"

namespace skewjdt {

// Plain-text and structured renderings of traces and reports. All output is
// deterministic: no timestamps, fixed ordering.

std::string format_trace(const BijectionTrace& trace);
nlohmann::json trace_to_json(const BijectionTrace& trace);

std::string format_identity_report(const IdentityReport& report);
nlohmann::json identity_report_to_json(const IdentityReport& report);

std::string format_bijection_report(const BijectionReport& report);
nlohmann::json bijection_report_to_json(const BijectionReport& report);

std::string format_matchup(const SkewShape& shape, std::int64_t a, Entry norm_value,
                           const std::vector<MatchupRow>& rows);
nlohmann::json matchup_to_json(const SkewShape& shape, std::int64_t a, Entry norm_value,
                               const std::vector<MatchupRow>& rows);

}  // namespace skewjdt
