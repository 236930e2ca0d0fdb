#pragma once

#include <string>
#include <vector>

#include "lawforge/laws.hpp"

#include <json.hpp>

namespace lawforge {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Report documents are deterministic: identical schema, config and flags
// produce byte-identical JSON, whatever the worker count. Wall times are
// therefore kept out of the document.
nlohmann::ordered_json config_to_json(const DomainConfig& cfg);
nlohmann::ordered_json report_to_json(const LawReport& report);
nlohmann::ordered_json document_to_json(const DomainConfig& cfg,
                                        const std::vector<LawReport>& reports);

// One human-readable line per report, e.g.
//   [FAIL] Identity Double :: Ord :: OrdRefl (4 cases) counterexample: Identity NaN
std::string render_report_line(const LawReport& report);
std::string render_summary(const std::vector<LawReport>& reports);

}  // namespace lawforge
