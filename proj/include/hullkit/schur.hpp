#ifndef HULLKIT_SCHUR_HPP
#define HULLKIT_SCHUR_HPP

#include <cstdint>
#include <vector>

#include "hullkit/audit.hpp"
#include "hullkit/group.hpp"

namespace hullkit {

/// Derived data attached to a pair H ≤ G for the Schur-type width
/// arguments: C = centralizer of H, K = normal core of C, n = [G : K].
/// Verified on construction (see schur_context):
///   - K is normal in G and K ⊆ C;
///   - g^n ∈ K for every g (so g^n centralizes H);
///   - K centralizes every conjugate c·H·c^-1.
/// plain_set and sigma_set are the distinct commutator values
/// {[g,h] : h ∈ H} and {[g, c·h·c^-1] : h ∈ H, c ∈ G}, precomputed once
/// since the rewriting threshold and the cardinality audits reuse them.
struct SchurContext {
  const FiniteGroup* group;
  Subgroup h;
  Subgroup c;
  Subgroup k;
  int n;
  std::vector<Elem> plain_set;
  std::vector<Elem> sigma_set;

  /// Word lengths above this are always reducible: max(n^4, |sigma_set|·n).
  /// n^4 is the headline bound; |sigma_set|·n is what the pigeonhole
  /// argument actually needs, so the larger of the two is always safe.
  std::int64_t rewrite_threshold() const;
};

/// Builds and verifies the context. Throws InternalCheckError naming the
/// violated invariant and a witness if verification fails — which would
/// falsify a theorem, so it must never fire on correct input.
SchurContext schur_context(const FiniteGroup& g, const Subgroup& h);

/// Claim audits for the documented cardinality bounds |plain_set| ≤ n² and
/// |sigma_set| ≤ n³. These are observations (claim-holds / claim-violated),
/// not hard invariants: nothing downstream depends on them.
AuditResult plain_cardinality_claim(const SchurContext& ctx);
AuditResult sigma_cardinality_claim(const SchurContext& ctx);

/// One commutator factor [g, c·h·c^-1], kept with its decoration so it can
/// be conjugated and rewritten without leaving this factor form.
struct DecoratedCommutator {
  Elem g;
  Elem c;
  Elem h;  // must lie in H
};

struct WordFactor {
  Elem g;
  Elem c;
  Elem h;
  Elem value;  // cached [g, c·h·c^-1]
};

/// A product of decorated commutators with its cached evaluation.
struct CommutatorWord {
  std::vector<WordFactor> factors;
  Elem product;  // left-to-right fold; identity for the empty word
};

/// Builds a word, validating each factor (h ∈ H) and caching values.
/// Throws FormatError on an invalid factor.
CommutatorWord make_word(const SchurContext& ctx, const std::vector<DecoratedCommutator>& factors);

/// Uniformly random factors (g, c over G, h over H), seeded by the caller.
CommutatorWord random_word(const SchurContext& ctx, Rng& rng, int length);

struct ReduceOutcome {
  CommutatorWord word;
  int rewrite_steps;        // each step shortens the word by exactly one
  std::int64_t threshold;   // the bound the output length satisfies
};

/// Shortens a word to length ≤ rewrite_threshold() with the same product.
/// One step: pick the most frequent factor value v (pigeonhole gives
/// multiplicity ≥ n+1 above the threshold; ties break to the smallest
/// element id), shuffle the first n+1 occurrences of v to the front —
/// each bypassed factor is conjugated by v^-1 and re-decorated, which
/// preserves both its value's conjugate and the factor form — then replace
/// the front block v^(n+1) by n factors via
///   [g, s]^(n+1) = [g, s²] · [s·g·s^-1, s]^(n-1)   with s = c·h·c^-1,
/// which is valid because [g,s]^n lies in K and so commutes with s.
/// Product preservation is asserted after every shuffle and every
/// replacement; any violation throws InternalCheckError.
ReduceOutcome reduce_word(const SchurContext& ctx, CommutatorWord word);

/// Exact commutator width: breadth-first search from the identity over
/// right-multiplication by the generator values; returns the maximum over
/// target elements of the minimal factor count (identity = 0 factors).
/// Throws FormatError("generators do not span target") if the closure of
/// the generators is not exactly the target.
int width(const FiniteGroup& g, const Subgroup& target, const std::vector<Elem>& generators);

struct PowerIdentityAudit {
  AuditResult identity;    // hard verdict for the corrected identity
  AuditResult short_form;  // informational claim for the two-factor form
};

/// Scans (g, c, h) with h ∈ H (exhaustive when |G|²·|H| fits the policy
/// budget, seeded samples otherwise) and checks, with s = c·h·c^-1:
///   (a) [g,s]^n commutes with s (the precondition), and
///   (b) [g,s]^(n+1) = [g,s²]·[s·g·s^-1, s]^(n-1).
/// Also observes whether the two-factor variant with exponent 1 instead of
/// n−1 holds, reported as a separate informational claim.
PowerIdentityAudit power_identity_check(const SchurContext& ctx, const ScanPolicy& policy);

/// Re-checks g^n ∈ K for every g, as a reportable audit record.
AuditResult power_in_core_audit(const SchurContext& ctx);

/// Stress record: reduces `words` seeded random words of length up to
/// `max_length` and checks product preservation plus the length contract
/// (short words come back untouched, long ones land under the threshold);
/// then checks that the plain commutator width of (G,H) sits under the
/// same threshold. Records whether n⁴ alone was a sufficient threshold.
AuditResult reduce_words_audit(const SchurContext& ctx, int words, int max_length,
                               std::uint64_t seed);

}  // namespace hullkit

#endif  // HULLKIT_SCHUR_HPP
