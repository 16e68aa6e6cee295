#ifndef HULLKIT_TRACE_HPP
#define HULLKIT_TRACE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hullkit/audit.hpp"
#include "hullkit/group.hpp"

namespace hullkit {

/// A finite group with a distinguished normal subgroup N (the "component"),
/// standing in for a group whose identity component has finite index.
/// Construction throws NotNormalError (with a witness pair) if N is not
/// normal in G.
struct ComponentedGroup {
  const FiniteGroup* group;
  Subgroup component;
  int component_count;  // |G| / |N|

  ComponentedGroup(const FiniteGroup& g, Subgroup n);
};

/// One step of the replayed argument: verdict, measured numbers, witness
/// element ids, and the element sets of any subgroups the step constructed.
struct TraceStep {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::vector<std::pair<std::string, std::int64_t>> data;
  std::vector<std::int64_t> witness;
  std::string note;
  std::map<std::string, std::vector<Elem>> sets;

  void put(const std::string& key, std::int64_t value) { data.emplace_back(key, value); }
};

/// The ordered record of the staged argument. Steps appear in dependency
/// order; once a step fails, the remaining steps are marked skipped.
/// Headline numbers stay -1 until their step has run.
struct ProofTrace {
  std::vector<TraceStep> steps;
  bool completed = false;
  std::int64_t n1 = -1;           // width of (N,H1) over its commutator values
  std::int64_t n2 = -1;           // width of (G,(N,H1)) over its commutator values
  std::int64_t d = -1;            // index of the hull of (N,H1) inside (G,H1)
  std::int64_t exact_width = -1;  // width of (G,H1) over plain commutator values
  std::int64_t bound = -1;        // n1 + n2 + d
  std::shared_ptr<const FiniteGroup> quotient_group;  // keeps step-4 data alive
};

/// Replays the staged hull argument on (G, N, H):
///   1 commutator-absorption:  C1 = (H,N); H normalizes C1; H1 = H·C1 is a
///     subgroup with H ⊆ H1 ⊆ hull(G,H).
///   2 component-normalizes:   N normalizes H1, plus the elementwise scan
///     g0·h·[g1,l]·g0^-1 = (g0·h·g0^-1)·[g0·g1, l]·[l, g0]
///     over g0,g1 ∈ N and h,l ∈ H1 (exhaustive within the policy budget,
///     seeded samples above it).
///   3 component-hull-split:   D = (N,H1); hull(D) = D·(G,D); n1, n2 by BFS.
///   4 quotient-centralizer:   Q = G/hull(D); the image of N centralizes
///     the image of H1; Schur-type context on the images.
///   5 commutator-image:       image of (G,H1) equals (Q, image H1);
///     hull(D) ⊆ (G,H1); d = |(G,H1)| / |hull(D) ∩ (G,H1)|.
///   6 hull-reassembly:        (G,H1) is normal; (G,H1)·H1 = hull(G,H)
///     = hull(G,H1).
///   7 width-bound:            exact width of (G,H1) over plain commutator
///     values {[g,h] : h ∈ H1} is ≤ n1+n2+d.
ProofTrace run_proof_trace(const ComponentedGroup& cg, const Subgroup& h,
                           const ScanPolicy& policy);

/// Collapses a trace into one reportable result: per-step verdicts, the
/// headline numbers (n1, n2, d, width, bound), and — on the first failing
/// step — its note and witness.
AuditResult trace_summary(const ProofTrace& trace);

/// Re-checks the final width comparison of a completed trace and reports
/// the slack (bound − exact width). Throws std::invalid_argument with
/// message "dependent step skipped" when the trace did not reach its final
/// step.
AuditResult width_bound_audit(const ProofTrace& trace);

/// Checks (H,G) = (H·(N,H), G) as element sets; a failure carries a
/// witness element from the symmetric difference.
AuditResult absorption_equality_audit(const ComponentedGroup& cg, const Subgroup& h);

}  // namespace hullkit

#endif  // HULLKIT_TRACE_HPP
