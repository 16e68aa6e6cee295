#ifndef HULLKIT_REPORT_HPP
#define HULLKIT_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hullkit/audit.hpp"

namespace hullkit {

/// One audit outcome bound to the objects it was computed on. `sets` holds
/// labeled element lists for single-target commands; bulk corpus runs
/// leave it empty and report orders in the numeric data instead.
struct AuditRecord {
  std::string group;      // group descriptor (family spec or file path)
  std::string subgroup;   // generator witness, e.g. "<(1 2)>"; may be empty
  std::string component;  // distinguished normal subgroup, for traces
  AuditResult result;
  std::map<std::string, std::vector<std::string>> sets;
  double wall_ms = -1.0;  // emitted only when timings are enabled
};

/// A full report: schema tag, tool version, the effective seed, the
/// command that produced it, and the records. Serialization is
/// deterministic — identical inputs and seed give byte-identical output —
/// unless timings are enabled.
struct AuditReport {
  std::string command;
  std::uint64_t seed = 0;
  bool timings = false;
  std::vector<AuditRecord> records;

  struct Summary {
    std::int64_t pass = 0, fail = 0, skipped = 0, claim_holds = 0, claim_violated = 0;
  };
  Summary summary() const;

  /// 1 when any record carries a hard fail; claim verdicts never count.
  int exit_code() const;

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace hullkit

#endif  // HULLKIT_REPORT_HPP
