#include "chief/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "chief/error.hpp"

namespace chief {

using nlohmann::json;

std::string to_string(Tri t) {
  switch (t) {
  case Tri::yes: return "true";
  case Tri::no: return "false";
  case Tri::unknown: return "indeterminate";
  }
  return "indeterminate";
}

namespace {

json instance_json(const TheoremInstance& inst) {
  json j;
  j["theorem"] = to_string(inst.theorem);
  j["group"] = inst.group;
  j["params"] = json::object();
  for (const auto& [k, v] : inst.params)
    j["params"][k] = v;
  j["hypothesis"] = to_string(inst.hypothesis);
  j["conclusion"] = inst.conclusion;
  j["status"] = to_string(inst.status());
  if (!inst.witness.empty())
    j["witness"] = inst.witness;
  if (!inst.certificate.empty())
    j["certificate"] = inst.certificate;
  if (!inst.note.empty())
    j["note"] = inst.note;
  return j;
}

} // namespace

std::string report_json(const CampaignReport& report) {
  json j;
  j["engine_version"] = report.engine;
  j["catalogue"] = json::array();
  for (const auto& line : report.catalogue)
    j["catalogue"].push_back(
        {{"name", line.name}, {"source", line.source}, {"order", line.order}});
  j["caps"] = {{"max_order", report.caps.max_order},
               {"lattice_cap", report.caps.lattice_cap},
               {"series_limit", report.caps.series_limit},
               {"sample_threshold", report.caps.sample_threshold},
               {"jobs", report.caps.jobs}};
  j["seed"] = report.caps.sample_seed;
  j["instances"] = json::array();
  for (const TheoremInstance& inst : report.instances)
    j["instances"].push_back(instance_json(inst));
  j["summary"] = {{"instances", report.instances.size()},
                  {"violations", report.violations},
                  {"indeterminate", report.indeterminates}};
  j["timing"] = {{"total_ms", report.total_ms}};
  return j.dump(2);
}

std::string report_table(const CampaignReport& report) {
  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"theorem", "group", "params", "hypothesis", "conclusion", "status"});
  for (const TheoremInstance& inst : report.instances) {
    std::string params;
    for (const auto& [k, v] : inst.params) {
      if (!params.empty())
        params += ' ';
      params += k + "=" + v;
    }
    rows.push_back({to_string(inst.theorem), inst.group, params,
                    to_string(inst.hypothesis), inst.conclusion ? "true" : "false",
                    to_string(inst.status())});
  }
  std::array<size_t, 6> width{};
  for (const auto& row : rows)
    for (size_t c = 0; c < 6; ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t c = 0; c < 6; ++c)
      os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    os << '\n';
  }
  os << "instances=" << report.instances.size()
     << " violations=" << report.violations
     << " indeterminate=" << report.indeterminates << '\n';
  return os.str();
}

void emit_report(const CampaignReport& report, const std::string& format,
                 std::ostream& out) {
  if (format == "json")
    out << report_json(report) << '\n';
  else if (format == "table")
    out << report_table(report);
  else
    throw DomainError("unknown report format: " + format);
}

} // namespace chief
