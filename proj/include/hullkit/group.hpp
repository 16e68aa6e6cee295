#ifndef HULLKIT_GROUP_HPP
#define HULLKIT_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hullkit/permutation.hpp"

namespace hullkit {

using Elem = int;

inline constexpr int kDefaultOrderCap = 5040;

/// A finite group given by its complete multiplication structure: element
/// ids 0..order-1, a dense product table, an inverse table and per-element
/// labels. Element 0 is always the identity. Immutable after construction.
class FiniteGroup {
 public:
  /// Builds the group generated by permutations of {1..degree}. Elements
  /// are discovered breadth-first from the identity, so ids are stable for
  /// a fixed generator list; labels are cycle notation.
  /// Throws OrderCapError once the closure exceeds `order_cap`.
  static FiniteGroup from_permutations(int degree, const std::vector<Perm>& gens,
                                       int order_cap = kDefaultOrderCap);

  /// Builds a group from a raw product table (row g, column h = g·h).
  /// Verifies the identity-at-0, inverse and associativity axioms and
  /// throws FormatError naming a witness triple on violation.
  static FiniteGroup from_table(std::vector<Elem> table, std::vector<std::string> labels = {});

  int order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  /// [a, b] = a·b·a^-1·b^-1.
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Elem pow(Elem a, long long k) const;

  const std::string& label(Elem e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Degree of the permutation representation this group was built from,
  /// or 0 for table-built groups.
  int degree() const { return degree_; }
  /// Underlying permutations (empty for table-built groups).
  const std::vector<Perm>& perms() const { return perms_; }

  /// A small generating set (construction generators when available,
  /// otherwise computed greedily by ascending element id).
  const std::vector<Elem>& generators() const { return generators_; }

  /// Resolves an element description: cycle notation for permutation-built
  /// groups, or a decimal element id. Throws FormatError if unknown.
  Elem element_by_name(const std::string& name) const;

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

  /// Re-checks the group axioms from scratch (identity, inverses, and —
  /// exhaustively, order^3 — associativity). Returns a diagnostic naming a
  /// witness on failure, or nullopt when all axioms hold.
  std::optional<std::string> check_axioms() const;

  const std::vector<Elem>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  void fill_inverses_and_identity_checked();
  void compute_greedy_generators();

  int order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> table_;  // order x order, row-major
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
  std::vector<Elem> generators_;
  int degree_ = 0;
  std::vector<Perm> perms_;  // populated only for permutation-built groups

  friend FiniteGroup direct_product_table(const FiniteGroup&, const FiniteGroup&);
  friend class QuotientBuilder;
};

/// A subgroup of a fixed parent group: a sorted element-id set closed under
/// product and inverse, plus the generator witnesses it was built from.
/// Subgroup equality is element-set equality within the same parent.
class Subgroup {
 public:
  /// Smallest subgroup containing `gens` (worklist closure).
  static Subgroup closure(const FiniteGroup& parent, std::vector<Elem> gens);

  /// Wraps an element set that is already a subgroup; verifies closure
  /// under product/inverse and membership of the identity, and records a
  /// greedily chosen generating set as witness. Throws InternalCheckError
  /// if the set is not a subgroup.
  static Subgroup from_elements(const FiniteGroup& parent, std::vector<Elem> elements);

  const FiniteGroup& parent() const { return *parent_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  bool contains(Elem e) const { return mask_[e] != 0; }

  bool is_normal() const;  // exhaustive over the parent
  bool contains_subgroup(const Subgroup& other) const;
  bool same_elements(const Subgroup& other) const { return elements_ == other.elements_; }
  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }

  /// "<(1 2), (3 4)>" — generator labels, for reports.
  std::string describe() const;

 private:
  Subgroup(const FiniteGroup& parent, std::vector<Elem> elements, std::vector<Elem> generators);

  const FiniteGroup* parent_;
  std::vector<Elem> elements_;   // sorted ascending
  std::vector<Elem> generators_;
  std::vector<char> mask_;       // parent-order indicator
};

/// Canonical projection G -> G/N. The target group is owned by the map;
/// target element 0 is the coset of the identity.
struct QuotientMap {
  const FiniteGroup* source;
  std::shared_ptr<const FiniteGroup> target;
  Subgroup kernel;
  std::vector<Elem> map;  // source id -> target id

  Elem operator()(Elem e) const { return map[e]; }
  /// Image of a subgroup of the source, as a subgroup of the target.
  Subgroup image(const Subgroup& sub) const;
};

// ---- group-core operations ------------------------------------------------

/// Group generated by permutations; element 0 is the identity, labels are
/// cycle notation. Errors: OrderCapError past the cap, FormatError for
/// non-bijective input.
FiniteGroup from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                        int order_cap = kDefaultOrderCap);

/// Smallest subgroup of `parent` containing `gens`.
Subgroup generate_closure(const FiniteGroup& parent, std::vector<Elem> gens);

/// { g in parent : g h = h g for every h in H }.
Subgroup centralizer(const FiniteGroup& parent, const Subgroup& h);

/// Largest normal subgroup of `parent` contained in `s`: the intersection
/// of all conjugates g S g^-1.
Subgroup normal_core(const FiniteGroup& parent, const Subgroup& s);

/// Quotient by a normal subgroup. Throws NotNormalError (with a witness
/// pair) if `n` is not normal in `parent`.
QuotientMap quotient(const FiniteGroup& parent, const Subgroup& n);

/// { g h g^-1 : h in H }.
Subgroup conjugate_subgroup(const Subgroup& h, Elem g);

/// [g, h] = g·h·g^-1·h^-1.
Elem commutator_element(const FiniteGroup& parent, Elem g, Elem h);

/// The parent group as a subgroup of itself (generator witnesses are the
/// parent's own generators).
Subgroup whole_group(const FiniteGroup& parent);

// ---- shared set helpers ----------------------------------------------------

/// All products a·b with a in A, b in B, as a sorted element set.
std::vector<Elem> product_set(const FiniteGroup& parent, const std::vector<Elem>& a,
                              const std::vector<Elem>& b);

/// True iff `elements` (sorted, non-empty) is closed under product and
/// inverse and contains the identity.
bool is_subgroup_set(const FiniteGroup& parent, const std::vector<Elem>& elements);

std::vector<Elem> intersect_sorted(const std::vector<Elem>& a, const std::vector<Elem>& b);

/// Direct product as a table group (pair labels). Used when either factor
/// lacks a permutation representation.
FiniteGroup direct_product_table(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace hullkit

#endif  // HULLKIT_GROUP_HPP
