#include "hullkit/trace.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "hullkit/commutator.hpp"
#include "hullkit/errors.hpp"
#include "hullkit/schur.hpp"

namespace hullkit {

namespace {

Elem first_sym_diff(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
  return diff.empty() ? -1 : diff.front();
}

const std::array<const char*, 7> kStepNames = {
    "commutator-absorption", "component-normalizes", "component-hull-split",
    "quotient-centralizer",  "commutator-image",     "hull-reassembly",
    "width-bound"};

}  // namespace

ComponentedGroup::ComponentedGroup(const FiniteGroup& g, Subgroup n)
    : group(&g), component(std::move(n)), component_count(0) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem e : component.elements())
      if (!component.contains(g.conj(x, e)))
        throw NotNormalError("component subgroup " + component.describe() +
                                 " is not normal: " + g.label(x) + "·" + g.label(e) + "·" +
                                 g.label(g.inv(x)) + " lies outside it",
                             x, e);
  component_count = g.order() / component.order();
}

ProofTrace run_proof_trace(const ComponentedGroup& cg, const Subgroup& h,
                           const ScanPolicy& policy) {
  const FiniteGroup& g = *cg.group;
  const Subgroup& n_sub = cg.component;
  Subgroup whole = whole_group(g);

  ProofTrace trace;
  bool halted = false;
  auto add_step = [&](TraceStep step) {
    if (step.verdict == Verdict::fail) halted = true;
    trace.steps.push_back(std::move(step));
  };
  auto skip_remaining = [&]() {
    for (std::size_t i = trace.steps.size(); i < kStepNames.size(); ++i) {
      TraceStep s;
      s.name = kStepNames[i];
      s.verdict = Verdict::skipped;
      s.note = "dependent step skipped";
      trace.steps.push_back(std::move(s));
    }
  };

  // -- step 1: H1 = H·(H,N), sandwiched between H and its hull ----------
  TraceStep s1;
  s1.name = kStepNames[0];
  Subgroup c1 = commutator_subgroup(g, h, n_sub);
  bool normalizes = true;
  for (Elem x : h.elements()) {
    for (Elem e : c1.elements())
      if (!c1.contains(g.conj(x, e))) {
        normalizes = false;
        s1.witness = {x, e};
        break;
      }
    if (!normalizes) break;
  }
  std::vector<Elem> product = product_set(g, h.elements(), c1.elements());
  bool product_subgroup = is_subgroup_set(g, product);
  Subgroup hull = normal_hull(g, h, HullConstruction::minimal_normal_closure).hull;

  std::optional<Subgroup> h1_opt;
  bool sandwich = false;
  if (product_subgroup) {
    h1_opt = Subgroup::from_elements(g, product);
    sandwich = h1_opt->contains_subgroup(h) && hull.contains_subgroup(*h1_opt);
  }
  s1.put("h-order", h.order());
  s1.put("c1-order", c1.order());
  s1.put("h1-order", product_subgroup ? h1_opt->order() : -1);
  s1.put("hull-order", hull.order());
  s1.put("h-normalizes-c1", normalizes);
  s1.put("product-subgroup", product_subgroup);
  s1.put("sandwich", sandwich);
  s1.sets["C1"] = c1.elements();
  if (product_subgroup) s1.sets["H1"] = h1_opt->elements();
  if (!normalizes || !product_subgroup || !sandwich) {
    s1.verdict = Verdict::fail;
    if (s1.note.empty()) s1.note = "H·(H,N) is not a subgroup sandwiched under the hull";
  }
  add_step(std::move(s1));
  if (halted) {
    skip_remaining();
    return trace;
  }
  Subgroup h1 = *h1_opt;

  // -- step 2: N normalizes H1; elementwise conjugation identity --------
  {
    TraceStep s2;
    s2.name = kStepNames[1];
    bool norm_ok = true;
    for (Elem x : n_sub.elements()) {
      for (Elem e : h1.elements())
        if (!h1.contains(g.conj(x, e))) {
          norm_ok = false;
          s2.witness = {x, e};
          break;
        }
      if (!norm_ok) break;
    }

    std::uint64_t tuples = static_cast<std::uint64_t>(n_sub.order()) * n_sub.order() *
                           h1.order() * h1.order();
    bool exhaustive = policy.exhaustive_for(tuples);
    bool identity_ok = true;
    auto check = [&](Elem g0, Elem g1, Elem hh, Elem l) {
      Elem lhs = g.mul(g.mul(g0, g.mul(hh, g.commutator(g1, l))), g.inv(g0));
      Elem rhs = g.mul(g.mul(g.conj(g0, hh), g.commutator(g.mul(g0, g1), l)),
                       g.commutator(l, g0));
      if (lhs != rhs && identity_ok) {
        identity_ok = false;
        s2.witness = {g0, g1, hh, l};
      }
    };
    std::uint64_t checked = 0;
    if (exhaustive) {
      for (Elem g0 : n_sub.elements())
        for (Elem g1 : n_sub.elements())
          for (Elem hh : h1.elements())
            for (Elem l : h1.elements()) check(g0, g1, hh, l);
      checked = tuples;
    } else {
      Rng rng(policy.seed);
      const auto& ns = n_sub.elements();
      const auto& hs = h1.elements();
      for (std::uint64_t i = 0; i < policy.samples; ++i)
        check(ns[rng.below(ns.size())], ns[rng.below(ns.size())], hs[rng.below(hs.size())],
              hs[rng.below(hs.size())]);
      checked = policy.samples;
    }
    s2.put("component-normalizes", norm_ok);
    s2.put("identity-holds", identity_ok);
    s2.put("tuples-checked", static_cast<std::int64_t>(checked));
    s2.put("exhaustive", exhaustive);
    if (!norm_ok || !identity_ok) {
      s2.verdict = Verdict::fail;
      s2.note = norm_ok ? "conjugation identity failed" : "component does not normalize H1";
    }
    add_step(std::move(s2));
    if (halted) {
      skip_remaining();
      return trace;
    }
  }

  // -- step 3: D = (N,H1); hull(D) = D·(G,D); widths n1, n2 -------------
  std::vector<Elem> d_values = commutator_values(g, n_sub, h1);
  Subgroup d_sub = Subgroup::closure(g, d_values);
  Subgroup dg = normal_hull(g, d_sub, HullConstruction::minimal_normal_closure).hull;
  std::vector<Elem> gd_values = commutator_values(g, whole, d_sub);
  Subgroup gd = Subgroup::closure(g, gd_values);
  {
    TraceStep s3;
    s3.name = kStepNames[2];
    std::vector<Elem> split = product_set(g, d_sub.elements(), gd.elements());
    bool split_subgroup = is_subgroup_set(g, split);
    bool split_equal = split == dg.elements();
    trace.n1 = width(g, d_sub, d_values);
    trace.n2 = width(g, gd, gd_values);
    s3.put("d-order", d_sub.order());
    s3.put("d-hull-order", dg.order());
    s3.put("gd-order", gd.order());
    s3.put("split-subgroup", split_subgroup);
    s3.put("split-equals-hull", split_equal);
    s3.put("n1", trace.n1);
    s3.put("n2", trace.n2);
    s3.sets["D"] = d_sub.elements();
    s3.sets["D-hull"] = dg.elements();
    if (!split_subgroup || !split_equal) {
      s3.verdict = Verdict::fail;
      s3.note = "hull(D) != D·(G,D)";
      s3.witness = {first_sym_diff(split, dg.elements())};
    }
    add_step(std::move(s3));
    if (halted) {
      skip_remaining();
      return trace;
    }
  }

  // -- step 4: quotient by hull(D); image of N centralizes image of H1 --
  QuotientMap q = quotient(g, dg);
  trace.quotient_group = q.target;
  Subgroup hbar = q.image(h1);
  {
    TraceStep s4;
    s4.name = kStepNames[3];
    Subgroup nbar = q.image(n_sub);
    bool centralizes = true;
    for (Elem x : nbar.elements()) {
      for (Elem y : hbar.elements())
        if (q.target->mul(x, y) != q.target->mul(y, x)) {
          centralizes = false;
          s4.witness = {x, y};
          break;
        }
      if (!centralizes) break;
    }
    s4.put("quotient-order", q.target->order());
    s4.put("hbar-order", hbar.order());
    s4.put("component-image-order", nbar.order());
    s4.put("image-centralizes", centralizes);
    try {
      SchurContext sctx = schur_context(*q.target, hbar);
      s4.put("schur-n", sctx.n);
      s4.put("schur-core-order", sctx.k.order());
    } catch (const InternalCheckError& e) {
      s4.verdict = Verdict::fail;
      s4.note = e.what();
    }
    if (!centralizes) {
      s4.verdict = Verdict::fail;
      s4.note = "image of the component does not centralize the image of H1";
    }
    add_step(std::move(s4));
    if (halted) {
      skip_remaining();
      return trace;
    }
  }

  // -- step 5: image of (G,H1); containment of hull(D); the index d -----
  Subgroup gh1 = commutator_subgroup(g, whole, h1);
  {
    TraceStep s5;
    s5.name = kStepNames[4];
    Subgroup image_gh1 = q.image(gh1);
    Subgroup qcomm = commutator_subgroup(*q.target, whole_group(*q.target), hbar);
    bool image_match = image_gh1.same_elements(qcomm);
    bool contained = gh1.contains_subgroup(dg);
    std::vector<Elem> inter = intersect_sorted(dg.elements(), gh1.elements());
    trace.d = gh1.order() / static_cast<std::int64_t>(inter.size());
    s5.put("gh1-order", gh1.order());
    s5.put("d-hull-order", dg.order());
    s5.put("intersection-order", static_cast<std::int64_t>(inter.size()));
    s5.put("d", trace.d);
    s5.put("image-match", image_match);
    s5.put("d-hull-contained", contained);
    s5.sets["GH1"] = gh1.elements();
    if (!image_match || !contained) {
      s5.verdict = Verdict::fail;
      s5.note = image_match ? "hull(D) escapes (G,H1)"
                            : "image of (G,H1) differs from the quotient commutator subgroup";
      if (!image_match)
        s5.witness = {first_sym_diff(image_gh1.elements(), qcomm.elements())};
    }
    add_step(std::move(s5));
    if (halted) {
      skip_remaining();
      return trace;
    }
  }

  // -- step 6: (G,H1) normal; (G,H1)·H1 = hull(G,H) = hull(G,H1) --------
  {
    TraceStep s6;
    s6.name = kStepNames[5];
    bool normal_ok = gh1.is_normal();
    std::vector<Elem> assembled = product_set(g, gh1.elements(), h1.elements());
    Subgroup hull_h = normal_hull(g, h, HullConstruction::minimal_normal_closure).hull;
    Subgroup hull_h1 = normal_hull(g, h1, HullConstruction::minimal_normal_closure).hull;
    bool assembled_subgroup = is_subgroup_set(g, assembled);
    bool matches_h = assembled == hull_h.elements();
    bool matches_h1 = hull_h.same_elements(hull_h1);
    s6.put("gh1-normal", normal_ok);
    s6.put("assembled-order", static_cast<std::int64_t>(assembled.size()));
    s6.put("hull-order", hull_h.order());
    s6.put("assembled-subgroup", assembled_subgroup);
    s6.put("assembled-equals-hull", matches_h);
    s6.put("hulls-agree", matches_h1);
    s6.sets["hull"] = hull_h.elements();
    if (!normal_ok || !assembled_subgroup || !matches_h || !matches_h1) {
      s6.verdict = Verdict::fail;
      s6.note = "(G,H1)·H1 does not reassemble the hull";
      s6.witness = {first_sym_diff(assembled, hull_h.elements())};
    }
    add_step(std::move(s6));
    if (halted) {
      skip_remaining();
      return trace;
    }
  }

  // -- step 7: exact width of (G,H1) against n1 + n2 + d ----------------
  {
    TraceStep s7;
    s7.name = kStepNames[6];
    std::vector<Elem> plain = commutator_values(g, whole, h1);
    trace.exact_width = width(g, gh1, plain);
    trace.bound = trace.n1 + trace.n2 + trace.d;
    s7.put("width", trace.exact_width);
    s7.put("bound", trace.bound);
    s7.put("slack", trace.bound - trace.exact_width);
    s7.put("n1", trace.n1);
    s7.put("n2", trace.n2);
    s7.put("d", trace.d);
    if (trace.exact_width > trace.bound) {
      s7.verdict = Verdict::fail;
      s7.note = "exact width exceeds n1+n2+d";
    }
    add_step(std::move(s7));
  }

  trace.completed = !halted;
  return trace;
}

AuditResult trace_summary(const ProofTrace& trace) {
  AuditResult r;
  r.name = "proof-trace";
  for (const TraceStep& step : trace.steps) {
    r.steps.emplace_back(step.name, step.verdict);
    if (step.verdict == Verdict::fail && r.verdict == Verdict::pass) {
      r.verdict = Verdict::fail;
      r.note = step.name + (step.note.empty() ? "" : ": " + step.note);
      r.witness = step.witness;
    }
  }
  if (!trace.completed && r.verdict == Verdict::pass) {
    r.verdict = Verdict::fail;  // defensive; a halt always has a failing step
    r.note = "trace stopped early without a failing step";
  }
  r.put("n1", trace.n1);
  r.put("n2", trace.n2);
  r.put("d", trace.d);
  r.put("width", trace.exact_width);
  r.put("bound", trace.bound);
  return r;
}

AuditResult width_bound_audit(const ProofTrace& trace) {
  if (!trace.completed || trace.exact_width < 0)
    throw std::invalid_argument("dependent step skipped");
  AuditResult r;
  r.name = "width-bound";
  r.put("width", trace.exact_width);
  r.put("bound", trace.bound);
  r.put("slack", trace.bound - trace.exact_width);
  r.put("n1", trace.n1);
  r.put("n2", trace.n2);
  r.put("d", trace.d);
  if (trace.exact_width > trace.bound) {
    r.verdict = Verdict::fail;
    r.note = "exact width exceeds n1+n2+d";
  }
  return r;
}

AuditResult absorption_equality_audit(const ComponentedGroup& cg, const Subgroup& h) {
  const FiniteGroup& g = *cg.group;
  Subgroup whole = whole_group(g);
  AuditResult r;
  r.name = "absorption-equality";

  Subgroup nh = commutator_subgroup(g, cg.component, h);
  std::vector<Elem> absorbed = product_set(g, h.elements(), nh.elements());
  bool absorbed_subgroup = is_subgroup_set(g, absorbed);
  r.put("absorbed-order", static_cast<std::int64_t>(absorbed.size()));
  r.put("absorbed-subgroup", absorbed_subgroup);
  if (!absorbed_subgroup) {
    r.verdict = Verdict::fail;
    r.note = "H·(N,H) is not a subgroup";
    return r;
  }

  Subgroup lhs = commutator_subgroup(g, h, whole);
  Subgroup rhs = commutator_subgroup(g, Subgroup::from_elements(g, absorbed), whole);
  r.put("hg-order", lhs.order());
  r.put("absorbed-hg-order", rhs.order());
  if (!lhs.same_elements(rhs)) {
    r.verdict = Verdict::fail;
    r.witness = {first_sym_diff(lhs.elements(), rhs.elements())};
    r.note = "(H,G) != (H·(N,H),G)";
  }
  return r;
}

}  // namespace hullkit
