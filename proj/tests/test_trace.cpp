#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hullkit/errors.hpp"
#include "hullkit/group.hpp"
#include "hullkit/trace.hpp"

using namespace hullkit;

namespace {

FiniteGroup sym(int n) {
  std::string cycle = "(1";
  for (int i = 2; i <= n; ++i) cycle += " " + std::to_string(i);
  cycle += ")";
  return FiniteGroup::from_permutations(n, {Perm::parse(n, "(1 2)"), Perm::parse(n, cycle)});
}

FiniteGroup cyclic(int n) {
  std::string cycle = "(1";
  for (int i = 2; i <= n; ++i) cycle += " " + std::to_string(i);
  cycle += ")";
  return FiniteGroup::from_permutations(n, {Perm::parse(n, cycle)});
}

Subgroup named_closure(const FiniteGroup& g, const std::vector<std::string>& names) {
  std::vector<Elem> gens;
  for (const std::string& name : names) gens.push_back(g.element_by_name(name));
  return Subgroup::closure(g, gens);
}

const std::vector<std::string> kExpectedSteps = {
    "commutator-absorption", "component-normalizes", "component-hull-split",
    "quotient-centralizer",  "commutator-image",     "hull-reassembly",
    "width-bound"};

void require_all_pass(const ProofTrace& trace) {
  REQUIRE(trace.steps.size() == kExpectedSteps.size());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    CAPTURE(trace.steps[i].name);
    CHECK(trace.steps[i].name == kExpectedSteps[i]);
    CHECK(trace.steps[i].verdict == Verdict::pass);
  }
  CHECK(trace.completed);
}

}  // namespace

TEST_CASE("component construction insists on normality") {
  FiniteGroup s3 = sym(3);
  Subgroup a3 = named_closure(s3, {"(1 2 3)"});
  ComponentedGroup cg(s3, a3);
  CHECK(cg.component_count == 2);

  Subgroup bad = named_closure(s3, {"(1 2)"});
  CHECK_THROWS_AS(ComponentedGroup(s3, bad), NotNormalError);
  try {
    ComponentedGroup doomed(s3, bad);
  } catch (const NotNormalError& e) {
    // the witness pair really does escape the subgroup
    CHECK(bad.contains(e.n));
    CHECK_FALSE(bad.contains(s3.conj(e.g, e.n)));
  }
}

TEST_CASE("trace for a transposition against the even component of S4") {
  FiniteGroup s4 = sym(4);
  ComponentedGroup cg(s4, named_closure(s4, {"(1 2 3)", "(1 2 4)"}));
  REQUIRE(cg.component_count == 2);
  Subgroup h = named_closure(s4, {"(1 2)"});

  ProofTrace trace = run_proof_trace(cg, h, ScanPolicy{});
  require_all_pass(trace);

  // H1 = H·(H,N) already fills S4, so its commutator subgroup is A4 and
  // the plain commutator values cover it in one step
  CHECK(trace.exact_width == 1);
  CHECK(trace.bound == trace.n1 + trace.n2 + trace.d);
  CHECK(trace.exact_width <= trace.bound);
  CHECK(trace.d >= 1);

  // step 1 numbers: (H,N) = A4, H1 = S4
  const TraceStep& s1 = trace.steps[0];
  auto get = [](const TraceStep& s, const std::string& key) {
    for (const auto& [k, v] : s.data)
      if (k == key) return v;
    return std::int64_t{-1};
  };
  CHECK(get(s1, "h-order") == 2);
  CHECK(get(s1, "c1-order") == 12);
  CHECK(get(s1, "h1-order") == 24);
  CHECK(get(s1, "hull-order") == 24);
  CHECK(get(trace.steps[1], "exhaustive") == 1);
}

TEST_CASE("trace numbers for a double transposition against the Klein component") {
  FiniteGroup s4 = sym(4);
  ComponentedGroup cg(s4, named_closure(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  REQUIRE(cg.component.order() == 4);
  REQUIRE(cg.component_count == 6);
  Subgroup h = named_closure(s4, {"(1 2)(3 4)"});

  ProofTrace trace = run_proof_trace(cg, h, ScanPolicy{});
  require_all_pass(trace);

  // N is abelian and contains H, so (H,N) and (N,H1) are trivial and the
  // whole bound comes from d = |(G,H1)| = |V4|
  CHECK(trace.n1 == 0);
  CHECK(trace.n2 == 0);
  CHECK(trace.d == 4);
  CHECK(trace.bound == 4);
  // (1 2)(3 4) needs two commutator values, the other two products need one
  CHECK(trace.exact_width == 2);
}

TEST_CASE("trace with the component equal to the whole group") {
  FiniteGroup s3 = sym(3);
  ComponentedGroup cg(s3, whole_group(s3));
  REQUIRE(cg.component_count == 1);
  Subgroup h = named_closure(s3, {"(1 2)"});

  ProofTrace trace = run_proof_trace(cg, h, ScanPolicy{});
  require_all_pass(trace);
  CHECK(trace.n1 == 1);
  CHECK(trace.n2 == 1);
  CHECK(trace.d == 1);
  CHECK(trace.exact_width == 1);
  CHECK(trace.bound == 3);
}

TEST_CASE("trace on an abelian group is all zeros") {
  FiniteGroup c6 = cyclic(6);
  ComponentedGroup cg(c6, named_closure(c6, {"(1 3 5)(2 4 6)"}));
  REQUIRE(cg.component_count == 2);

  ProofTrace trace = run_proof_trace(cg, whole_group(c6), ScanPolicy{});
  require_all_pass(trace);
  CHECK(trace.n1 == 0);
  CHECK(trace.n2 == 0);
  CHECK(trace.d == 1);  // the commutator subgroup is trivial
  CHECK(trace.exact_width == 0);
}

TEST_CASE("trace summary collapses a passing trace") {
  FiniteGroup s4 = sym(4);
  ComponentedGroup cg(s4, named_closure(s4, {"(1 2 3)", "(1 2 4)"}));
  ProofTrace trace = run_proof_trace(cg, named_closure(s4, {"(1 2)"}), ScanPolicy{});

  AuditResult r = trace_summary(trace);
  CHECK(r.name == "proof-trace");
  CHECK(r.verdict == Verdict::pass);
  REQUIRE(r.steps.size() == 7);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    CHECK(r.steps[i].first == kExpectedSteps[i]);
    CHECK(r.steps[i].second == Verdict::pass);
  }
  CHECK(r.get("n1") == trace.n1);
  CHECK(r.get("n2") == trace.n2);
  CHECK(r.get("d") == trace.d);
  CHECK(r.get("width") == trace.exact_width);
  CHECK(r.get("bound") == trace.bound);
  CHECK(r.note.empty());
}

TEST_CASE("width bound audit reports the slack") {
  FiniteGroup s4 = sym(4);
  ComponentedGroup cg(s4, named_closure(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  ProofTrace trace = run_proof_trace(cg, named_closure(s4, {"(1 2)(3 4)"}), ScanPolicy{});
  REQUIRE(trace.completed);

  AuditResult r = width_bound_audit(trace);
  CHECK(r.name == "width-bound");
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.get("width") == 2);
  CHECK(r.get("bound") == 4);
  CHECK(r.get("slack") == 2);
}

TEST_CASE("width bound audit refuses an incomplete trace") {
  ProofTrace blank;
  CHECK_THROWS_WITH_AS(width_bound_audit(blank), "dependent step skipped", std::invalid_argument);
}

TEST_CASE("absorption leaves the commutator subgroup unchanged") {
  FiniteGroup s4 = sym(4);

  ComponentedGroup even(s4, named_closure(s4, {"(1 2 3)", "(1 2 4)"}));
  AuditResult r = absorption_equality_audit(even, named_closure(s4, {"(1 2)"}));
  CHECK(r.name == "absorption-equality");
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.get("absorbed-order") == 24);  // H·(N,H) is already all of S4
  CHECK(r.get("hg-order") == 12);
  CHECK(r.get("absorbed-hg-order") == 12);

  ComponentedGroup klein(s4, named_closure(s4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
  AuditResult rk = absorption_equality_audit(klein, named_closure(s4, {"(1 2)(3 4)"}));
  CHECK(rk.verdict == Verdict::pass);
  CHECK(rk.get("absorbed-order") == 2);  // (N,H) is trivial here
  CHECK(rk.get("hg-order") == 4);
}
