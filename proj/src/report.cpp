#include "hullkit/report.hpp"

#include <sstream>

#include "json.hpp"

#include "hullkit/version.hpp"

namespace hullkit {

using ordered_json = nlohmann::ordered_json;

AuditReport::Summary AuditReport::summary() const {
  Summary s;
  auto count = [&s](Verdict v) {
    switch (v) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::skipped: ++s.skipped; break;
      case Verdict::claim_holds: ++s.claim_holds; break;
      case Verdict::claim_violated: ++s.claim_violated; break;
    }
  };
  for (const AuditRecord& r : records) count(r.result.verdict);
  return s;
}

int AuditReport::exit_code() const { return summary().fail > 0 ? 1 : 0; }

std::string AuditReport::to_json() const {
  ordered_json doc;
  doc["report"] = kReportSchema;
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["seed"] = seed;

  Summary s = summary();
  doc["summary"] = {{"records", records.size()},
                    {"pass", s.pass},
                    {"fail", s.fail},
                    {"skipped", s.skipped},
                    {"claim-holds", s.claim_holds},
                    {"claim-violated", s.claim_violated}};

  doc["records"] = ordered_json::array();
  for (const AuditRecord& r : records) {
    ordered_json rec;
    rec["group"] = r.group;
    if (!r.subgroup.empty()) rec["subgroup"] = r.subgroup;
    if (!r.component.empty()) rec["component"] = r.component;
    rec["audit"] = r.result.name;
    rec["verdict"] = verdict_string(r.result.verdict);
    if (!r.result.data.empty()) {
      ordered_json data;
      for (const auto& [key, value] : r.result.data) data[key] = value;
      rec["data"] = std::move(data);
    }
    if (!r.result.steps.empty()) {
      ordered_json steps = ordered_json::array();
      for (const auto& [name, verdict] : r.result.steps)
        steps.push_back({{"name", name}, {"verdict", verdict_string(verdict)}});
      rec["steps"] = std::move(steps);
    }
    if (!r.result.witness.empty()) rec["witness"] = r.result.witness;
    if (!r.result.note.empty()) rec["note"] = r.result.note;
    if (!r.sets.empty()) {
      ordered_json sets;
      for (const auto& [name, labels] : r.sets) sets[name] = labels;
      rec["sets"] = std::move(sets);
    }
    if (timings && r.wall_ms >= 0) rec["wall-ms"] = r.wall_ms;
    doc["records"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

std::string AuditReport::to_text() const {
  std::ostringstream out;
  out << kReportSchema << " | " << kVersion << " | command: " << command << " | seed: " << seed
      << "\n";
  for (const AuditRecord& r : records) {
    out << verdict_string(r.result.verdict) << "\t" << r.result.name << "\t" << r.group;
    if (!r.subgroup.empty()) out << " H=" << r.subgroup;
    if (!r.component.empty()) out << " N=" << r.component;
    for (const auto& [key, value] : r.result.data) out << " " << key << "=" << value;
    if (!r.result.steps.empty()) {
      out << " steps=";
      for (std::size_t i = 0; i < r.result.steps.size(); ++i) {
        if (i) out << ",";
        out << r.result.steps[i].first << ":" << verdict_string(r.result.steps[i].second);
      }
    }
    if (!r.result.witness.empty()) {
      out << " witness=";
      for (std::size_t i = 0; i < r.result.witness.size(); ++i)
        out << (i ? "," : "") << r.result.witness[i];
    }
    if (!r.result.note.empty()) out << " note: " << r.result.note;
    if (timings && r.wall_ms >= 0) out << " wall-ms=" << r.wall_ms;
    out << "\n";
  }
  Summary s = summary();
  out << "summary: records=" << records.size() << " pass=" << s.pass << " fail=" << s.fail
      << " skipped=" << s.skipped << " claim-holds=" << s.claim_holds
      << " claim-violated=" << s.claim_violated << "\n";
  return out.str();
}

}  // namespace hullkit
