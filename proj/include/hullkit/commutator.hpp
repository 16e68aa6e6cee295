#ifndef HULLKIT_COMMUTATOR_HPP
#define HULLKIT_COMMUTATOR_HPP

#include <vector>

#include "hullkit/audit.hpp"
#include "hullkit/group.hpp"

namespace hullkit {

enum class HullConstruction { minimal_normal_closure, conjugate_generation };

inline const char* construction_string(HullConstruction c) {
  return c == HullConstruction::minimal_normal_closure ? "minimal-normal-closure"
                                                       : "conjugate-generation";
}

/// A computed normal hull together with which construction produced it and
/// how many closure passes it took. For conjugate-generation the pass
/// count is always 1 (a single generation step).
struct HullResult {
  Subgroup hull;
  HullConstruction construction;
  int iterations;
};

/// Sorted distinct commutator values {[a,b] : a in A, b in B}.
std::vector<Elem> commutator_values(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Subgroup generated by {[h,k] : h in H, k in K}.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// Smallest normal subgroup of G containing H.
///
/// minimal-normal-closure: worklist — conjugate newly found elements by a
/// generating set of G, close under products, repeat until stable; the
/// result's normality is re-verified exhaustively afterwards.
/// conjugate-generation: one pass — generate over the union of all gHg^-1.
HullResult normal_hull(const FiniteGroup& g, const Subgroup& h, HullConstruction construction);

/// Runs both hull constructions and checks they produce the same element
/// set; reports the hull order and the worklist pass count. A disagreement
/// carries a witness element from the symmetric difference.
AuditResult hull_equivalence_audit(const FiniteGroup& g, const Subgroup& h);

/// Checks the hull decomposition H^G = H·(G,H): (a) (G,H) is normal,
/// (b) the product set H·(G,H) is a subgroup equal to the hull, (c) both
/// hull constructions agree. A failure carries a witness element from the
/// offending symmetric difference.
AuditResult hull_decomposition_audit(const FiniteGroup& g, const Subgroup& h);

/// Exhaustively (or, past the scan budget, by seeded sampling) checks the
/// three elementwise conjugation identities that the commutator calculus
/// rests on:
///   (1) c·[g,h]·c^-1        = [cg,h]·[h,c]
///   (2) [g, c·h·c^-1]       = c·[c^-1·g·c, h]·c^-1
///   (3) g·h·g^-1            = [g,h]·h
AuditResult conjugation_identity_audits(const FiniteGroup& g, const ScanPolicy& policy);

/// Checks that (G, cHc^-1) = (G, H) as element sets for every c in G,
/// i.e. the commutator subgroup is invariant under inner twists of H.
AuditResult conjugation_invariance_audit(const FiniteGroup& g, const Subgroup& h);

}  // namespace hullkit

#endif  // HULLKIT_COMMUTATOR_HPP
