#include "hullkit/commutator.hpp"

#include <algorithm>

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

/// First element of the symmetric difference of two sorted sets, or -1.
Elem first_sym_diff(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return diff.empty() ? -1 : diff.front();
}

}  // namespace

std::vector<Elem> commutator_values(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out;
  for (Elem x : a.elements())
    for (Elem y : b.elements()) {
      Elem v = g.commutator(x, y);
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  return Subgroup::closure(g, commutator_values(g, h, k));
}

HullResult normal_hull(const FiniteGroup& g, const Subgroup& h, HullConstruction construction) {
  if (construction == HullConstruction::conjugate_generation) {
    // single pass: generate over the union of all conjugates of H
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> gens;
    for (Elem c = 0; c < g.order(); ++c)
      for (Elem x : h.elements()) {
        Elem y = g.conj(c, x);
        if (!seen[y]) {
          seen[y] = 1;
          gens.push_back(y);
        }
      }
    Subgroup hull = Subgroup::closure(g, std::move(gens));
    if (!hull.is_normal())
      throw InternalCheckError("conjugate-generation produced a non-normal hull");
    return HullResult{std::move(hull), construction, 1};
  }

  // minimal-normal-closure: conjugate only newly discovered elements by a
  // generating set of G, then close under products; repeat until stable
  std::vector<char> in_set(g.order(), 0);
  std::vector<Elem> members = h.elements();
  for (Elem e : members) in_set[e] = 1;
  std::vector<Elem> fresh = members;
  int iterations = 0;

  while (!fresh.empty()) {
    std::vector<Elem> conjugates;
    for (Elem x : fresh)
      for (Elem c : g.generators()) {
        Elem y = g.conj(c, x);
        if (!in_set[y]) {
          in_set[y] = 1;
          conjugates.push_back(y);
        }
      }
    if (conjugates.empty()) break;
    ++iterations;

    // product closure of the enlarged set; everything newly reached counts
    // as fresh for the next conjugation pass
    std::vector<Elem> added = std::move(conjugates);
    for (std::size_t head = 0; head < added.size(); ++head)
      for (std::size_t i = 0; i < members.size() + added.size(); ++i) {
        Elem other = i < members.size() ? members[i] : added[i - members.size()];
        for (Elem p : {g.mul(added[head], other), g.mul(other, added[head])})
          if (!in_set[p]) {
            in_set[p] = 1;
            added.push_back(p);
          }
      }
    members.insert(members.end(), added.begin(), added.end());
    fresh = std::move(added);
  }

  std::sort(members.begin(), members.end());
  Subgroup hull = Subgroup::from_elements(g, std::move(members));
  if (!hull.is_normal())
    throw InternalCheckError("minimal-normal-closure produced a non-normal hull");
  if (!hull.contains_subgroup(h))
    throw InternalCheckError("normal hull does not contain the input subgroup");
  return HullResult{std::move(hull), construction, iterations};
}

AuditResult hull_equivalence_audit(const FiniteGroup& g, const Subgroup& h) {
  AuditResult r;
  r.name = "hull-equivalence";
  HullResult worklist = normal_hull(g, h, HullConstruction::minimal_normal_closure);
  HullResult onepass = normal_hull(g, h, HullConstruction::conjugate_generation);
  r.put("hull-order", worklist.hull.order());
  r.put("closure-passes", worklist.iterations);
  if (!worklist.hull.same_elements(onepass.hull)) {
    r.verdict = Verdict::fail;
    r.note = "the two hull constructions disagree";
    r.witness = {first_sym_diff(worklist.hull.elements(), onepass.hull.elements())};
  }
  return r;
}

AuditResult hull_decomposition_audit(const FiniteGroup& g, const Subgroup& h) {
  AuditResult r;
  r.name = "hull-decomposition";

  HullResult minimal = normal_hull(g, h, HullConstruction::minimal_normal_closure);
  HullResult conjgen = normal_hull(g, h, HullConstruction::conjugate_generation);
  bool agree = minimal.hull.same_elements(conjgen.hull);

  Subgroup commutators = commutator_subgroup(g, whole_group(g), h);
  bool commutator_normal = commutators.is_normal();
  std::vector<Elem> product = product_set(g, h.elements(), commutators.elements());
  bool product_subgroup = is_subgroup_set(g, product);
  bool product_equals_hull = product == minimal.hull.elements();

  r.put("hull-order", minimal.hull.order());
  r.put("commutator-order", commutators.order());
  r.put("product-order", static_cast<std::int64_t>(product.size()));
  r.put("closure-passes", minimal.iterations);
  r.put("constructions-agree", agree);
  r.put("commutator-normal", commutator_normal);
  r.put("product-subgroup", product_subgroup);
  r.put("product-equals-hull", product_equals_hull);

  if (!agree) {
    r.verdict = Verdict::fail;
    r.note = "hull constructions disagree";
    r.witness = {first_sym_diff(minimal.hull.elements(), conjgen.hull.elements())};
  } else if (!commutator_normal || !product_subgroup || !product_equals_hull) {
    r.verdict = Verdict::fail;
    r.note = "hull decomposition H·(G,H) failed";
    r.witness = {first_sym_diff(product, minimal.hull.elements())};
  }
  return r;
}

AuditResult conjugation_identity_audits(const FiniteGroup& g, const ScanPolicy& policy) {
  AuditResult r;
  r.name = "conjugation-identities";
  int n = g.order();

  // (3) g·h·g^-1 = [g,h]·h ranges over pairs; always checked exhaustively
  Verdict v3 = Verdict::pass;
  for (Elem x = 0; x < n && v3 == Verdict::pass; ++x)
    for (Elem y = 0; y < n; ++y)
      if (g.conj(x, y) != g.mul(g.commutator(x, y), y)) {
        v3 = Verdict::fail;
        if (r.witness.empty()) r.witness = {3, x, y};
        break;
      }

  auto check_triple = [&](Elem c, Elem x, Elem y, Verdict& v1, Verdict& v2) {
    // (1) c[g,h]c^-1 = [cg,h][h,c]
    if (v1 == Verdict::pass &&
        g.conj(c, g.commutator(x, y)) !=
            g.mul(g.commutator(g.mul(c, x), y), g.commutator(y, c))) {
      v1 = Verdict::fail;
      if (r.witness.empty()) r.witness = {1, c, x, y};
    }
    // (2) [g, chc^-1] = c[c^-1gc, h]c^-1
    if (v2 == Verdict::pass &&
        g.commutator(x, g.conj(c, y)) !=
            g.conj(c, g.commutator(g.conj(g.inv(c), x), y))) {
      v2 = Verdict::fail;
      if (r.witness.empty()) r.witness = {2, c, x, y};
    }
  };

  Verdict v1 = Verdict::pass, v2 = Verdict::pass;
  std::uint64_t tuple_count = static_cast<std::uint64_t>(n) * n * n;
  bool exhaustive = policy.exhaustive_for(tuple_count);
  std::uint64_t checked = 0;
  if (exhaustive) {
    for (Elem c = 0; c < n; ++c)
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) check_triple(c, x, y, v1, v2);
    checked = tuple_count;
  } else {
    Rng rng(policy.seed);
    for (std::uint64_t i = 0; i < policy.samples; ++i)
      check_triple(static_cast<Elem>(rng.below(n)), static_cast<Elem>(rng.below(n)),
                   static_cast<Elem>(rng.below(n)), v1, v2);
    checked = policy.samples;
  }

  r.steps = {{"conjugate-commutator-split", v1},
             {"conjugated-argument-transport", v2},
             {"conjugation-via-commutator", v3}};
  r.put("order", n);
  r.put("triples-checked", static_cast<std::int64_t>(checked));
  r.put("exhaustive", exhaustive);
  if (v1 != Verdict::pass || v2 != Verdict::pass || v3 != Verdict::pass) {
    r.verdict = Verdict::fail;
    r.note = "a conjugation identity failed; witness = (identity#, elements...)";
  }
  return r;
}

AuditResult conjugation_invariance_audit(const FiniteGroup& g, const Subgroup& h) {
  AuditResult r;
  r.name = "conjugation-invariance";
  Subgroup whole = whole_group(g);
  Subgroup base = commutator_subgroup(g, whole, h);
  r.put("commutator-order", base.order());
  r.put("conjugators", g.order());
  for (Elem c = 0; c < g.order(); ++c) {
    Subgroup twisted = commutator_subgroup(g, whole, conjugate_subgroup(h, c));
    if (!twisted.same_elements(base)) {
      r.verdict = Verdict::fail;
      r.witness = {c, first_sym_diff(twisted.elements(), base.elements())};
      r.note = "commutator subgroup changed under conjugation of H; witness = (c, element)";
      return r;
    }
  }
  return r;
}

}  // namespace hullkit
