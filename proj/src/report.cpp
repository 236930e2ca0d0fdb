#include "lawforge/report.hpp"

namespace lawforge {

nlohmann::ordered_json config_to_json(const DomainConfig& cfg) {
  nlohmann::ordered_json j;
  j["int_domain"] = cfg.int_domain;
  j["bool_domain"] = {false, true};
  std::vector<std::string> chars;
  for (char c : cfg.char_domain) chars.emplace_back(1, c);
  j["char_domain"] = chars;
  j["double_domain"] = cfg.double_domain;
  j["include_nan"] = cfg.include_nan;
  j["depth"] = cfg.depth;
  j["max_cases"] = cfg.max_cases;
  return j;
}

nlohmann::ordered_json report_to_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["type"] = r.type_text;
  j["concept"] = r.concept_text;
  j["law"] = std::string(law_name(r.law));
  j["status"] = std::string(status_name(r.outcome.status));
  j["cases_checked"] = r.outcome.cases_checked;
  j["truncated"] = r.outcome.truncated;
  if (r.outcome.status == CheckStatus::Fail) {
    nlohmann::ordered_json cex;
    std::vector<std::string> values;
    for (const auto& v : r.outcome.counterexample) values.push_back(to_string(v));
    cex["values"] = values;
    if (!r.outcome.counterexample_fns.empty()) {
      std::vector<std::string> fns;
      for (const auto& f : r.outcome.counterexample_fns) fns.push_back(f.name);
      cex["functions"] = fns;
    }
    j["counterexample"] = cex;
  }
  return j;
}

nlohmann::ordered_json document_to_json(const DomainConfig& cfg,
                                        const std::vector<LawReport>& reports) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = std::string(kToolVersion);
  doc["config"] = config_to_json(cfg);
  doc["reports"] = nlohmann::ordered_json::array();
  std::size_t pass = 0, fail = 0, unsupported = 0;
  for (const auto& r : reports) {
    doc["reports"].push_back(report_to_json(r));
    switch (r.outcome.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Unsupported: ++unsupported; break;
    }
  }
  doc["summary"] = {{"pass", pass}, {"fail", fail}, {"unsupported", unsupported}};
  return doc;
}

std::string render_report_line(const LawReport& r) {
  std::string out;
  switch (r.outcome.status) {
    case CheckStatus::Pass: out = "[PASS] "; break;
    case CheckStatus::Fail: out = "[FAIL] "; break;
    case CheckStatus::Unsupported: out = "[UNSUPPORTED] "; break;
  }
  out += r.type_text + " :: " + r.concept_text + " :: " + std::string(law_name(r.law));
  if (r.outcome.status != CheckStatus::Unsupported) {
    out += " (" + std::to_string(r.outcome.cases_checked) + " cases";
    if (r.outcome.truncated) out += ", truncated";
    out += ")";
  }
  if (r.outcome.status == CheckStatus::Fail) {
    out += " counterexample:";
    for (const auto& f : r.outcome.counterexample_fns) out += " " + f.name;
    for (const auto& v : r.outcome.counterexample) out += " " + to_string(v, /*atom=*/true);
  }
  return out;
}

std::string render_summary(const std::vector<LawReport>& reports) {
  std::size_t pass = 0, fail = 0, unsupported = 0;
  for (const auto& r : reports) {
    switch (r.outcome.status) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::Unsupported: ++unsupported; break;
    }
  }
  return std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
         std::to_string(unsupported) + " unsupported";
}

}  // namespace lawforge
