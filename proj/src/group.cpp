#include "hullkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "hullkit/errors.hpp"

namespace hullkit {

// ---- FiniteGroup ------------------------------------------------------------

FiniteGroup FiniteGroup::from_permutations(int degree, const std::vector<Perm>& gens,
                                           int order_cap) {
  if (degree < 0) throw FormatError("degree must be non-negative");
  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw FormatError("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree));
  }

  FiniteGroup g;
  g.degree_ = degree;

  // Breadth-first closure from the identity, so the identity is element 0
  // and ids are reproducible for a fixed generator list.
  std::map<std::vector<int>, Elem> index;
  Perm id(degree);
  g.perms_.push_back(id);
  index[id.images()] = 0;
  for (std::size_t head = 0; head < g.perms_.size(); ++head) {
    Perm cur = g.perms_[head];
    for (const Perm& gen : gens) {
      Perm next = cur * gen;
      auto [it, inserted] = index.try_emplace(next.images(), static_cast<Elem>(g.perms_.size()));
      if (inserted) {
        if (static_cast<int>(g.perms_.size()) >= order_cap)
          throw OrderCapError("group too large: closure exceeds the order cap " +
                                  std::to_string(order_cap),
                              order_cap);
        g.perms_.push_back(next);
      }
    }
  }

  g.order_ = static_cast<int>(g.perms_.size());
  g.table_.resize(static_cast<std::size_t>(g.order_) * g.order_);
  for (Elem a = 0; a < g.order_; ++a)
    for (Elem b = 0; b < g.order_; ++b)
      g.table_[static_cast<std::size_t>(a) * g.order_ + b] =
          index.at((g.perms_[a] * g.perms_[b]).images());

  g.labels_.reserve(g.order_);
  for (const Perm& p : g.perms_) g.labels_.push_back(p.cycle_string());

  for (const Perm& gen : gens) {
    Elem e = index.at(gen.images());
    if (std::find(g.generators_.begin(), g.generators_.end(), e) == g.generators_.end())
      g.generators_.push_back(e);
  }
  if (g.generators_.empty()) g.generators_.push_back(0);

  g.fill_inverses_and_identity_checked();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<Elem> table, std::vector<std::string> labels) {
  FiniteGroup g;
  std::size_t n2 = table.size();
  int n = 0;
  while (static_cast<std::size_t>(n) * n < n2) ++n;
  if (n == 0 || static_cast<std::size_t>(n) * n != n2)
    throw FormatError("product table has " + std::to_string(n2) +
                      " entries, which is not a perfect square");
  g.order_ = n;
  g.table_ = std::move(table);
  for (std::size_t i = 0; i < g.table_.size(); ++i) {
    if (g.table_[i] < 0 || g.table_[i] >= n)
      throw FormatError("product table entry " + std::to_string(g.table_[i]) + " at position " +
                        std::to_string(i) + " is outside 0.." + std::to_string(n - 1));
  }

  if (labels.empty()) {
    for (Elem e = 0; e < n; ++e) labels.push_back(std::to_string(e));
  }
  if (static_cast<int>(labels.size()) != n)
    throw FormatError("expected " + std::to_string(n) + " labels, got " +
                      std::to_string(labels.size()));
  g.labels_ = std::move(labels);

  g.fill_inverses_and_identity_checked();

  // Exhaustive associativity check with a witness triple.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw FormatError("product table is not associative: (" + g.labels_[a] + "·" +
                            g.labels_[b] + ")·" + g.labels_[c] + " != " + g.labels_[a] + "·(" +
                            g.labels_[b] + "·" + g.labels_[c] + ")");
    }

  g.compute_greedy_generators();
  return g;
}

void FiniteGroup::fill_inverses_and_identity_checked() {
  int n = order_;
  for (Elem b = 0; b < n; ++b) {
    if (mul(0, b) != b)
      throw FormatError("element 0 is not a left identity: 0·" + std::to_string(b) +
                        " = " + std::to_string(mul(0, b)));
    if (mul(b, 0) != b)
      throw FormatError("element 0 is not a right identity: " + std::to_string(b) +
                        "·0 = " + std::to_string(mul(b, 0)));
  }
  identity_ = 0;
  inverse_.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0)
      throw FormatError("element " + std::to_string(a) + " has no two-sided inverse");
  }
}

void FiniteGroup::compute_greedy_generators() {
  generators_.clear();
  std::vector<char> have(order_, 0);
  have[identity_] = 1;
  for (Elem e = 0; e < order_; ++e) {
    if (have[e]) continue;
    generators_.push_back(e);
    // refresh the closure of the generators picked so far
    std::vector<Elem> elems{identity_};
    std::fill(have.begin(), have.end(), 0);
    have[identity_] = 1;
    for (std::size_t head = 0; head < elems.size(); ++head)
      for (Elem g : generators_) {
        Elem next = mul(elems[head], g);
        if (!have[next]) {
          have[next] = 1;
          elems.push_back(next);
        }
      }
  }
  if (generators_.empty()) generators_.push_back(identity_);
}

Elem FiniteGroup::pow(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem acc = identity_;
  while (k > 0) {
    if (k & 1) acc = mul(acc, a);
    a = mul(a, a);
    k >>= 1;
  }
  return acc;
}

Elem FiniteGroup::element_by_name(const std::string& name) const {
  std::string trimmed = name;
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!trimmed.empty() && issp(trimmed.front())) trimmed.erase(trimmed.begin());
  while (!trimmed.empty() && issp(trimmed.back())) trimmed.pop_back();
  if (trimmed.empty()) throw FormatError("empty element name");

  if (trimmed.front() == '(') {
    if (degree_ == 0)
      throw FormatError("cycle notation '" + trimmed +
                        "' is only valid for permutation-built groups; use element ids");
    Perm p = Perm::parse(degree_, trimmed);
    for (Elem e = 0; e < order_; ++e)
      if (perms_[e] == p) return e;
    throw FormatError("permutation " + p.cycle_string() + " is not an element of this group");
  }

  for (char c : trimmed)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw FormatError("cannot parse element name '" + trimmed +
                        "': expected cycle notation or a decimal element id");
  long v = std::stol(trimmed);
  if (v < 0 || v >= order_)
    throw FormatError("element id " + trimmed + " is outside 0.." + std::to_string(order_ - 1));
  return static_cast<Elem>(v);
}

std::optional<std::string> FiniteGroup::check_axioms() const {
  int n = order_;
  for (Elem b = 0; b < n; ++b)
    if (mul(identity_, b) != b || mul(b, identity_) != b)
      return "identity axiom fails at element " + std::to_string(b);
  for (Elem a = 0; a < n; ++a)
    if (mul(a, inv(a)) != identity_ || mul(inv(a), a) != identity_)
      return "inverse axiom fails at element " + std::to_string(a);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          return "associativity fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                 ", " + std::to_string(c) + ")";
    }
  return std::nullopt;
}

// ---- Subgroup ---------------------------------------------------------------

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Elem> elements,
                   std::vector<Elem> generators)
    : parent_(&parent),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      mask_(parent.order(), 0) {
  for (Elem e : elements_) mask_[e] = 1;
}

Subgroup Subgroup::closure(const FiniteGroup& parent, std::vector<Elem> gens) {
  for (Elem g : gens)
    if (g < 0 || g >= parent.order())
      throw FormatError("generator id " + std::to_string(g) + " is outside the parent group");

  std::vector<char> seen(parent.order(), 0);
  std::vector<Elem> elems{parent.identity()};
  seen[parent.identity()] = 1;
  // worklist closure: every word in the generators appears as some
  // element·generator product, and inverses come for free in a finite group
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (Elem g : gens) {
      Elem next = parent.mul(elems[head], g);
      if (!seen[next]) {
        seen[next] = 1;
        elems.push_back(next);
      }
    }
  std::sort(elems.begin(), elems.end());

  std::vector<Elem> kept;
  for (Elem g : gens)
    if (std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  return Subgroup(parent, std::move(elems), std::move(kept));
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Elem e : elements)
    if (e < 0 || e >= parent.order())
      throw InternalCheckError("subgroup element id " + std::to_string(e) +
                               " is outside the parent group");
  if (!is_subgroup_set(parent, elements))
    throw InternalCheckError("element set is not closed under the group operations");

  // greedy generating set, ascending by element id
  std::vector<Elem> gens;
  std::vector<char> have(parent.order(), 0);
  have[parent.identity()] = 1;
  std::size_t covered = 1;
  for (Elem e : elements) {
    if (have[e]) continue;
    gens.push_back(e);
    Subgroup c = closure(parent, gens);
    for (Elem x : c.elements())
      if (!have[x]) {
        have[x] = 1;
        ++covered;
      }
    if (covered == elements.size()) break;
  }
  return Subgroup(parent, std::move(elements), std::move(gens));
}

bool Subgroup::is_normal() const {
  const FiniteGroup& g = *parent_;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem h : elements_)
      if (!contains(g.conj(x, h))) return false;
  return true;
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  for (Elem e : other.elements_)
    if (!contains(e)) return false;
  return true;
}

std::string Subgroup::describe() const {
  if (generators_.empty()) return "<" + parent_->label(parent_->identity()) + ">";
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += parent_->label(generators_[i]);
  }
  return out + ">";
}

// ---- QuotientMap ------------------------------------------------------------

class QuotientBuilder {
 public:
  static QuotientMap build(const FiniteGroup& parent, const Subgroup& n) {
    // normality check with an explicit witness pair
    for (Elem g = 0; g < parent.order(); ++g)
      for (Elem h : n.elements())
        if (!n.contains(parent.conj(g, h)))
          throw NotNormalError("subgroup " + n.describe() + " is not normal: " + parent.label(g) +
                                   "·" + parent.label(h) + "·" + parent.label(parent.inv(g)) +
                                   " = " + parent.label(parent.conj(g, h)) + " lies outside it",
                               g, h);

    // cosets in ascending order of their least element, so the identity
    // coset is element 0 of the quotient
    std::vector<Elem> coset_of(parent.order(), -1);
    std::vector<Elem> rep;
    for (Elem e = 0; e < parent.order(); ++e) {
      if (coset_of[e] >= 0) continue;
      Elem c = static_cast<Elem>(rep.size());
      rep.push_back(e);
      for (Elem h : n.elements()) coset_of[parent.mul(e, h)] = c;
    }

    int q = static_cast<int>(rep.size());
    FiniteGroup target;
    target.order_ = q;
    target.table_.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b)
        target.table_[static_cast<std::size_t>(a) * q + b] = coset_of[parent.mul(rep[a], rep[b])];
    target.labels_.reserve(q);
    for (Elem c = 0; c < q; ++c) target.labels_.push_back("[" + parent.label(rep[c]) + "]");
    target.fill_inverses_and_identity_checked();
    target.compute_greedy_generators();

    QuotientMap out{&parent, std::make_shared<FiniteGroup>(std::move(target)), n,
                    std::move(coset_of)};

    // the projection must be a homomorphism; anything else is a bug here
    for (Elem a = 0; a < parent.order(); ++a)
      for (Elem b = 0; b < parent.order(); ++b)
        if (out.map[parent.mul(a, b)] != out.target->mul(out.map[a], out.map[b]))
          throw InternalCheckError("quotient projection is not a homomorphism at (" +
                                   std::to_string(a) + ", " + std::to_string(b) + ")");
    return out;
  }
};

Subgroup QuotientMap::image(const Subgroup& sub) const {
  std::vector<Elem> elems;
  elems.reserve(sub.elements().size());
  for (Elem e : sub.elements()) elems.push_back(map[e]);
  return Subgroup::from_elements(*target, std::move(elems));
}

// ---- free operations --------------------------------------------------------

FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                        int order_cap) {
  return FiniteGroup::from_permutations(degree, gens, order_cap);
}

Subgroup generate_closure(const FiniteGroup& parent, std::vector<Elem> gens) {
  return Subgroup::closure(parent, std::move(gens));
}

Subgroup centralizer(const FiniteGroup& parent, const Subgroup& h) {
  // commuting with a generating set is commuting with the whole subgroup
  std::vector<Elem> elems;
  for (Elem g = 0; g < parent.order(); ++g) {
    bool commutes = true;
    for (Elem x : h.generators())
      if (parent.mul(g, x) != parent.mul(x, g)) {
        commutes = false;
        break;
      }
    if (commutes) elems.push_back(g);
  }
  return Subgroup::from_elements(parent, std::move(elems));
}

Subgroup normal_core(const FiniteGroup& parent, const Subgroup& s) {
  std::vector<Elem> core = s.elements();
  for (Elem g = 0; g < parent.order() && core.size() > 1; ++g) {
    std::vector<Elem> conj;
    conj.reserve(s.elements().size());
    for (Elem h : s.elements()) conj.push_back(parent.conj(g, h));
    std::sort(conj.begin(), conj.end());
    core = intersect_sorted(core, conj);
  }
  return Subgroup::from_elements(parent, std::move(core));
}

QuotientMap quotient(const FiniteGroup& parent, const Subgroup& n) {
  return QuotientBuilder::build(parent, n);
}

Subgroup conjugate_subgroup(const Subgroup& h, Elem g) {
  const FiniteGroup& parent = h.parent();
  std::vector<Elem> gens;
  gens.reserve(h.generators().size());
  for (Elem x : h.generators()) gens.push_back(parent.conj(g, x));
  Subgroup out = Subgroup::closure(parent, std::move(gens));
  if (out.order() != h.order())
    throw InternalCheckError("conjugate subgroup has a different order than the original");
  return out;
}

Elem commutator_element(const FiniteGroup& parent, Elem g, Elem h) {
  return parent.commutator(g, h);
}

Subgroup whole_group(const FiniteGroup& parent) {
  return Subgroup::closure(parent, parent.generators());
}

// ---- shared set helpers -----------------------------------------------------

std::vector<Elem> product_set(const FiniteGroup& parent, const std::vector<Elem>& a,
                              const std::vector<Elem>& b) {
  std::vector<char> seen(parent.order(), 0);
  std::vector<Elem> out;
  for (Elem x : a)
    for (Elem y : b) {
      Elem p = parent.mul(x, y);
      if (!seen[p]) {
        seen[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup_set(const FiniteGroup& parent, const std::vector<Elem>& elements) {
  if (elements.empty()) return false;
  std::vector<char> mask(parent.order(), 0);
  for (Elem e : elements) mask[e] = 1;
  if (!mask[parent.identity()]) return false;
  for (Elem a : elements) {
    if (!mask[parent.inv(a)]) return false;
    for (Elem b : elements)
      if (!mask[parent.mul(a, b)]) return false;
  }
  return true;
}

std::vector<Elem> intersect_sorted(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FiniteGroup direct_product_table(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  int na = a.order(), nb = b.order();
  g.order_ = na * nb;
  g.table_.resize(static_cast<std::size_t>(g.order_) * g.order_);
  auto id = [nb](Elem x, Elem y) { return x * nb + y; };
  for (Elem x1 = 0; x1 < na; ++x1)
    for (Elem y1 = 0; y1 < nb; ++y1)
      for (Elem x2 = 0; x2 < na; ++x2)
        for (Elem y2 = 0; y2 < nb; ++y2)
          g.table_[static_cast<std::size_t>(id(x1, y1)) * g.order_ + id(x2, y2)] =
              id(a.mul(x1, x2), b.mul(y1, y2));
  g.labels_.reserve(g.order_);
  for (Elem x = 0; x < na; ++x)
    for (Elem y = 0; y < nb; ++y) g.labels_.push_back("(" + a.label(x) + ", " + b.label(y) + ")");
  for (Elem x : a.generators())
    if (id(x, 0) != 0) g.generators_.push_back(id(x, 0));
  for (Elem y : b.generators())
    if (id(0, y) != 0) g.generators_.push_back(id(0, y));
  if (g.generators_.empty()) g.generators_.push_back(0);
  g.fill_inverses_and_identity_checked();
  return g;
}

}  // namespace hullkit
