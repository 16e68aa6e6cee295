#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "hullkit/errors.hpp"
#include "hullkit/group.hpp"
#include "hullkit/permutation.hpp"

using hullkit::Elem;
using hullkit::FiniteGroup;
using hullkit::FormatError;
using hullkit::InternalCheckError;
using hullkit::intersect_sorted;
using hullkit::NotNormalError;
using hullkit::Perm;
using hullkit::Subgroup;

namespace {

FiniteGroup sym(int n) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::parse(n, "(1 2)"));
  if (n >= 3) {
    std::string big = "(";
    for (int i = 1; i <= n; ++i) big += (i > 1 ? " " : "") + std::to_string(i);
    big += ")";
    gens.push_back(Perm::parse(n, big));
  }
  return FiniteGroup::from_permutations(n, gens);
}

Subgroup named_closure(const FiniteGroup& g, const std::vector<std::string>& names) {
  std::vector<Elem> gens;
  for (const std::string& name : names) gens.push_back(g.element_by_name(name));
  return Subgroup::closure(g, gens);
}

}  // namespace

TEST_CASE("closure from permutation generators") {
  const FiniteGroup s3 = sym(3);
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  CHECK(s3.label(0) == "()");
  CHECK(s3.degree() == 3);

  // every element resolves back to its own id through its label
  for (Elem e = 0; e < s3.order(); ++e) CHECK(s3.element_by_name(s3.label(e)) == e);
  CHECK_THROWS_AS(s3.element_by_name("(1 4)"), FormatError);
  CHECK_THROWS_AS(s3.element_by_name("nonsense"), FormatError);
  CHECK(s3.check_axioms() == std::nullopt);
}

TEST_CASE("multiplication agrees with permutation composition") {
  const FiniteGroup s4 = sym(4);
  REQUIRE(s4.order() == 24);
  for (Elem a = 0; a < s4.order(); ++a)
    for (Elem b = 0; b < s4.order(); ++b) {
      const Perm expect = s4.perms()[a] * s4.perms()[b];
      CHECK(s4.perms()[s4.mul(a, b)] == expect);
    }
  for (Elem a = 0; a < s4.order(); ++a)
    CHECK((s4.perms()[a] * s4.perms()[s4.inv(a)]).is_identity());
}

TEST_CASE("Klein four group is elementary abelian") {
  const FiniteGroup v4 = FiniteGroup::from_permutations(
      4, {Perm::parse(4, "(1 2)"), Perm::parse(4, "(3 4)")});
  CHECK(v4.order() == 4);
  for (Elem a = 0; a < 4; ++a) {
    CHECK(v4.pow(a, 2) == v4.identity());
    for (Elem b = 0; b < 4; ++b) CHECK(v4.mul(a, b) == v4.mul(b, a));
  }
}

TEST_CASE("powers, including negative exponents") {
  const FiniteGroup s3 = sym(3);
  const Elem r = s3.element_by_name("(1 2 3)");
  CHECK(s3.pow(r, 0) == s3.identity());
  CHECK(s3.pow(r, 3) == s3.identity());
  CHECK(s3.pow(r, 2) == s3.element_by_name("(1 3 2)"));
  CHECK(s3.pow(r, -1) == s3.inv(r));
  CHECK(s3.pow(r, 100) == s3.pow(r, 100 % 3));
}

TEST_CASE("centralizer, normal core, and conjugate subgroups") {
  const FiniteGroup s4 = sym(4);
  const Subgroup h = named_closure(s4, {"(1 2)"});

  const Subgroup cent = centralizer(s4, h);
  CHECK(cent.order() == 4);  // {(), (1 2), (3 4), (1 2)(3 4)}
  CHECK(cent.contains(s4.element_by_name("(3 4)")));
  CHECK(cent.contains(s4.element_by_name("(1 2)(3 4)")));

  const FiniteGroup s3 = sym(3);
  const Subgroup t = named_closure(s3, {"(1 2)"});
  CHECK(normal_core(s3, t).order() == 1);
  CHECK(normal_core(s3, named_closure(s3, {"(1 2 3)"})).order() == 3);

  const Subgroup conj = conjugate_subgroup(t, s3.element_by_name("(1 3)"));
  CHECK(conj.same_elements(named_closure(s3, {"(2 3)"})));
}

TEST_CASE("quotient by the Klein four subgroup of S4") {
  const FiniteGroup s4 = sym(4);
  const Subgroup v4 = named_closure(s4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  REQUIRE(v4.order() == 4);
  REQUIRE(v4.is_normal());

  const hullkit::QuotientMap q = quotient(s4, v4);
  CHECK(q.target->order() == 6);
  CHECK(q.kernel.same_elements(v4));
  CHECK(q(s4.identity()) == q.target->identity());
  for (Elem a = 0; a < s4.order(); a += 5)
    for (Elem b = 0; b < s4.order(); b += 3)
      CHECK(q(s4.mul(a, b)) == q.target->mul(q(a), q(b)));

  const Subgroup a4 = named_closure(s4, {"(1 2 3)", "(1 2 4)"});
  REQUIRE(a4.order() == 12);
  CHECK(q.image(a4).order() == 3);

  // quotient by a non-normal subgroup refuses with a witness
  const FiniteGroup s3 = sym(3);
  const Subgroup t = named_closure(s3, {"(1 2)"});
  CHECK_THROWS_AS(quotient(s3, t), NotNormalError);
  try {
    quotient(s3, t);
  } catch (const NotNormalError& e) {
    CHECK(std::string(e.what()).find("not normal") != std::string::npos);
    CHECK(t.contains(e.n));
    CHECK_FALSE(t.contains(s3.conj(e.g, e.n)));
  }
}

TEST_CASE("table validation names the violated axiom") {
  // C3 as a raw table
  const FiniteGroup c3 = FiniteGroup::from_table({0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK(c3.order() == 3);
  CHECK(c3.check_axioms() == std::nullopt);
  CHECK(c3.element_by_name("2") == 2);
  CHECK_THROWS_AS(c3.element_by_name("(1 2)"), FormatError);  // no permutations behind it

  auto message_of = [](std::vector<Elem> table) {
    try {
      FiniteGroup::from_table(std::move(table));
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };

  CHECK(message_of({0, 1, 2}).find("perfect square") != std::string::npos);
  CHECK(message_of({0, 9, 1, 0}).find("outside") != std::string::npos);
  CHECK(message_of({1, 0, 0, 1}).find("identity") != std::string::npos);
  CHECK(message_of({0, 1, 1, 1}).find("inverse") != std::string::npos);
  // identity and inverses fine, associativity broken: (1·1)·2 != 1·(1·2)
  CHECK(message_of({0, 1, 2, 1, 0, 1, 2, 1, 0}).find("not associative") != std::string::npos);

  CHECK_THROWS_AS(FiniteGroup::from_table({0, 1, 1, 0}, {"only-one-label"}), FormatError);
}

TEST_CASE("generated subgroups and normality") {
  const FiniteGroup s3 = sym(3);
  const Subgroup a3 = named_closure(s3, {"(1 2 3)"});
  CHECK(a3.order() == 3);
  CHECK(a3.is_normal());
  CHECK(a3.describe() == "<(1 2 3)>");

  const Subgroup t = named_closure(s3, {"(1 2)"});
  CHECK(t.order() == 2);
  CHECK_FALSE(t.is_normal());

  const Subgroup whole = whole_group(s3);
  CHECK(whole.order() == 6);
  CHECK(whole.contains_subgroup(a3));
  CHECK(whole.contains_subgroup(t));
  CHECK_FALSE(a3.contains_subgroup(t));

  const Subgroup trivial = Subgroup::closure(s3, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.describe() == "<()>");

  // from_elements validates closure and rebuilds a generating set
  const Subgroup rebuilt = Subgroup::from_elements(s3, a3.elements());
  CHECK(rebuilt.same_elements(a3));
  CHECK(Subgroup::closure(s3, rebuilt.generators()).same_elements(a3));
  CHECK_THROWS_AS(
      Subgroup::from_elements(s3, {s3.identity(), s3.element_by_name("(1 2 3)")}),
      InternalCheckError);
}

TEST_CASE("product sets and intersections") {
  const FiniteGroup s3 = sym(3);
  const Subgroup a3 = named_closure(s3, {"(1 2 3)"});
  const Subgroup t = named_closure(s3, {"(1 2)"});

  const std::vector<Elem> all = product_set(s3, a3.elements(), t.elements());
  CHECK(all.size() == 6);
  CHECK(is_subgroup_set(s3, all));

  const Subgroup u = named_closure(s3, {"(1 3)"});
  const std::vector<Elem> partial = product_set(s3, t.elements(), u.elements());
  CHECK(partial.size() == 4);
  CHECK_FALSE(is_subgroup_set(s3, partial));

  CHECK(intersect_sorted(a3.elements(), t.elements()) ==
        std::vector<Elem>{s3.identity()});
}

TEST_CASE("direct product of raw tables") {
  const FiniteGroup c2 = FiniteGroup::from_table({0, 1, 1, 0});
  const FiniteGroup c3 = FiniteGroup::from_table({0, 1, 2, 1, 2, 0, 2, 0, 1});
  const FiniteGroup c6 = direct_product_table(c2, c3);
  CHECK(c6.order() == 6);
  CHECK(c6.check_axioms() == std::nullopt);
  CHECK(c6.label(0) == "(0, 0)");

  // componentwise structure: some element has order 6
  bool found_order6 = false;
  for (Elem e = 0; e < 6; ++e) {
    int k = 1;
    Elem acc = e;
    while (acc != c6.identity() && k < 10) {
      acc = c6.mul(acc, e);
      ++k;
    }
    if (k == 6) found_order6 = true;
  }
  CHECK(found_order6);

  // table groups fall back to greedy generators that regenerate the group
  CHECK(Subgroup::closure(c6, c6.generators()).order() == 6);
}
