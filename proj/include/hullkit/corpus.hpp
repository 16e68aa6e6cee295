#ifndef HULLKIT_CORPUS_HPP
#define HULLKIT_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hullkit/group.hpp"
#include "hullkit/report.hpp"

namespace hullkit {

/// One corpus member. `sampled` marks the large groups (order > 48) whose
/// subgroup and component lists are thinned to a deterministic strided
/// subset to keep the audit budget sane; everything of order ≤ 48 is
/// audited with every 2-generated subgroup and every normal subgroup.
struct CorpusEntry {
  std::string name;  // family spec usable as a --group argument
  FiniteGroup group;
  bool sampled;
};

/// The fixed audit corpus, in deterministic order: cyclic groups up to
/// order 48, dihedral up to order 48, symmetric and alternating up to
/// degree 4, the quaternion group, a fixed list of direct products of
/// order ≤ 48, and three larger products (orders 64, 100, 144). Entries
/// above `max_order` are dropped.
std::vector<CorpusEntry> build_corpus(int max_order);

struct CorpusOptions {
  int max_order = 200;
  std::uint64_t seed = 0;
  int words_per_context = 1000;  // random words per rewriting context
  int max_word_length = 64;
  bool timings = false;
  int threads = 0;  // 0 = hardware concurrency; results never depend on it
};

/// Runs every audit over the corpus and assembles the report:
/// per group      group-axioms, conjugation-identities, roundtrip,
///                subgroup-enumeration;
/// per (G,H)      hull-equivalence, hull-decomposition,
///                conjugation-invariance, schur-context, power-in-core,
///                claim-plain-n2, claim-sigma-n3, power-identity,
///                claim-short-power-identity, reduce-words;
/// per (G,N,H)    proof-trace, width-bound, absorption-equality.
/// Record order is fixed; sampled scans draw their seeds from
/// options.seed, so identical options give identical reports.
AuditReport run_full_audit(const CorpusOptions& options);

}  // namespace hullkit

#endif  // HULLKIT_CORPUS_HPP
