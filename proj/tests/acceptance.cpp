// Acceptance gate: runs the full built-in corpus audit twice through the
// CLI entry point, then evaluates six release criteria against the report
// (and a handful of independently computed spot targets). Prints exactly
// one line per criterion and exits 0 only if every criterion passes.
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hullkit/cli.hpp"
#include "hullkit/commutator.hpp"
#include "hullkit/families.hpp"
#include "hullkit/group.hpp"
#include "hullkit/trace.hpp"

using namespace hullkit;
using nlohmann::json;

namespace {

struct Corpus {
  json records;
  std::map<std::string, std::vector<json>> by_audit;
  std::map<std::string, std::int64_t> group_order;          // from group-axioms
  std::map<std::string, std::int64_t> group_subgroup_count; // from subgroup-enumeration

  explicit Corpus(const json& doc) : records(doc.at("records")) {
    for (const json& rec : records) {
      const std::string audit = rec.at("audit");
      by_audit[audit].push_back(rec);
      const std::string group = rec.at("group");
      if (audit == "group-axioms") group_order[group] = rec.at("data").at("order");
      if (audit == "subgroup-enumeration")
        group_subgroup_count[group] = rec.at("data").at("subgroup-count");
    }
  }

  const std::vector<json>& of(const std::string& audit) {
    static const std::vector<json> empty;
    auto it = by_audit.find(audit);
    return it == by_audit.end() ? empty : it->second;
  }
};

bool all_verdict(const std::vector<json>& recs, const std::set<std::string>& allowed,
                 const std::string& what) {
  if (recs.empty()) {
    std::cerr << "  [" << what << "] no records found\n";
    return false;
  }
  for (const json& rec : recs) {
    const std::string v = rec.at("verdict");
    if (!allowed.count(v)) {
      std::cerr << "  [" << what << "] unexpected verdict '" << v << "' for group "
                << rec.at("group") << "\n";
      return false;
    }
  }
  return true;
}

bool all_pass(const std::vector<json>& recs, const std::string& what) {
  return all_verdict(recs, {"pass"}, what);
}

std::int64_t data_of(const json& rec, const std::string& key) {
  return rec.at("data").at(key).get<std::int64_t>();
}

FiniteGroup sym4() {
  return FiniteGroup::from_permutations(4, {Perm::parse(4, "(1 2)"), Perm::parse(4, "(1 2 3 4)")});
}

Subgroup named_closure(const FiniteGroup& g, const std::vector<std::string>& names) {
  std::vector<Elem> gens;
  for (const std::string& name : names) gens.push_back(g.element_by_name(name));
  return Subgroup::closure(g, gens);
}

bool trace_all_pass(const FiniteGroup& g, const Subgroup& n, const Subgroup& h) {
  ComponentedGroup cg(g, n);
  ProofTrace trace = run_proof_trace(cg, h, ScanPolicy{});
  if (!trace.completed || trace.steps.size() != 7) return false;
  for (const TraceStep& step : trace.steps)
    if (step.verdict != Verdict::pass) return false;
  return trace.exact_width <= trace.bound;
}

}  // namespace

int main() {
  std::ostringstream out1, err1, out2, err2;
  const std::vector<std::string> args{"audit-all", "--seed", "42"};
  const int code1 = run_cli(args, out1, err1);
  const int code2 = run_cli(args, out2, err2);

  json doc;
  bool parsed = false;
  try {
    doc = json::parse(out1.str());
    parsed = true;
  } catch (const std::exception& e) {
    std::cerr << "  report did not parse as JSON: " << e.what() << "\n";
  }

  bool c1 = false, c2 = false, c3 = false, c4 = false, c5 = false;
  const bool c6 = parsed && code1 == 0 && code2 == 0 && out1.str() == out2.str();

  if (parsed) {
    Corpus corpus(doc);

    // -- criterion 1: the two hull constructions agree on every pair -----
    c1 = code1 == 0 && doc.at("summary").at("fail") == 0 &&
         all_pass(corpus.of("hull-equivalence"), "hull-equivalence");
    if (c1) {
      // every full-tier group contributes one record per 2-generated
      // subgroup; a count mismatch means pairs were silently dropped
      std::map<std::string, std::int64_t> seen;
      for (const json& rec : corpus.of("hull-equivalence")) ++seen[rec.at("group")];
      for (const auto& [group, order] : corpus.group_order) {
        const std::int64_t want =
            order <= 48 ? corpus.group_subgroup_count.at(group) : std::int64_t{1};
        if (seen[group] < want) {
          std::cerr << "  [hull-equivalence] group " << group << " has " << seen[group]
                    << " records, expected at least " << want << "\n";
          c1 = false;
        }
      }
    }

    // -- criterion 2: decomposition, inner twists, elementwise identities -
    c2 = all_pass(corpus.of("hull-decomposition"), "hull-decomposition") &&
         all_pass(corpus.of("conjugation-invariance"), "conjugation-invariance") &&
         all_pass(corpus.of("conjugation-identities"), "conjugation-identities") &&
         corpus.of("hull-decomposition").size() == corpus.of("hull-equivalence").size();
    if (c2)
      for (const json& rec : corpus.of("conjugation-identities")) {
        const std::string group = rec.at("group");
        if (corpus.group_order.at(group) <= 64 && data_of(rec, "exhaustive") != 1) {
          std::cerr << "  [conjugation-identities] " << group << " was not checked exhaustively\n";
          c2 = false;
        }
      }

    // -- criterion 3: power facts, rewriting, and the size claims ---------
    c3 = all_pass(corpus.of("power-in-core"), "power-in-core") &&
         all_pass(corpus.of("power-identity"), "power-identity") &&
         all_pass(corpus.of("reduce-words"), "reduce-words") &&
         all_verdict(corpus.of("claim-plain-n2"), {"claim-holds", "claim-violated"},
                     "claim-plain-n2") &&
         all_verdict(corpus.of("claim-sigma-n3"), {"claim-holds", "claim-violated"},
                     "claim-sigma-n3") &&
         all_verdict(corpus.of("claim-short-power-identity"),
                     {"claim-holds", "claim-violated"}, "claim-short-power-identity");
    if (c3)
      for (const json& rec : corpus.of("power-identity")) {
        const std::string group = rec.at("group");
        const bool exhaustive = data_of(rec, "exhaustive") == 1;
        const bool sampled_enough = data_of(rec, "tuples-checked") >= 1000000;
        if (corpus.group_order.at(group) <= 64 ? !exhaustive : !(exhaustive || sampled_enough)) {
          std::cerr << "  [power-identity] scan coverage too small for " << group << "\n";
          c3 = false;
        }
      }

    // -- criterion 4: the staged trace, its width bound, spot targets -----
    c4 = all_pass(corpus.of("proof-trace"), "proof-trace") &&
         all_pass(corpus.of("width-bound"), "width-bound") &&
         corpus.of("width-bound").size() == corpus.of("proof-trace").size();
    if (c4)
      for (const json& rec : corpus.of("width-bound")) {
        const std::int64_t width = data_of(rec, "width");
        const std::int64_t bound = data_of(rec, "bound");
        if (width > bound || data_of(rec, "slack") != bound - width) {
          std::cerr << "  [width-bound] inconsistent numbers for " << rec.at("group") << "\n";
          c4 = false;
        }
      }
    if (c4) {
      const FiniteGroup s4 = sym4();
      const Subgroup transposition = named_closure(s4, {"(1 2)"});
      const Subgroup double_swap = named_closure(s4, {"(1 2)(3 4)"});
      const Subgroup a4 = named_closure(s4, {"(1 2 3)", "(1 2 4)"});
      const Subgroup v4 = named_closure(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
      const Subgroup whole = whole_group(s4);
      const bool spots =
          normal_hull(s4, transposition, HullConstruction::minimal_normal_closure).hull.order() ==
              24 &&
          normal_hull(s4, double_swap, HullConstruction::conjugate_generation).hull.order() == 4 &&
          commutator_subgroup(s4, whole, whole).order() == 12 &&
          trace_all_pass(s4, a4, transposition) && trace_all_pass(s4, v4, double_swap);
      if (!spots) {
        std::cerr << "  [spot targets] a hand-checked S4 target came out wrong\n";
        c4 = false;
      }
    }

    // -- criterion 5: absorption never changes the commutator subgroup ----
    c5 = all_pass(corpus.of("absorption-equality"), "absorption-equality") &&
         corpus.of("absorption-equality").size() == corpus.of("proof-trace").size();
  }

  const struct {
    const char* label;
    bool ok;
  } criteria[] = {
      {"criterion 1 (hull constructions agree on every corpus pair)", c1},
      {"criterion 2 (decomposition, inner twists, elementwise identities)", c2},
      {"criterion 3 (power facts, word rewriting, size claims reported)", c3},
      {"criterion 4 (staged trace, width bound, spot targets)", c4},
      {"criterion 5 (absorption equality on every corpus triple)", c5},
      {"criterion 6 (byte-identical reports for a fixed seed)", c6},
  };

  bool all = true;
  for (const auto& c : criteria) {
    std::cout << c.label << ": " << (c.ok ? "pass" : "fail") << "\n";
    all = all && c.ok;
  }
  return all ? 0 : 1;
}
