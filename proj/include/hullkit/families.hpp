#ifndef HULLKIT_FAMILIES_HPP
#define HULLKIT_FAMILIES_HPP

#include <string>

#include "hullkit/group.hpp"

namespace hullkit {

/// Standard families as permutation groups:
///   cyclic:n      ⟨(1 2 … n)⟩, order n
///   dihedral:n    rotation + reflection on n points, order 2n
///                 (n = 1 gives the order-2 group, n = 2 the Klein four group)
///   symmetric:n   ⟨(1 2), (1 2 … n)⟩, order n!
///   alternating:n ⟨(1 2 k) : 3 ≤ k ≤ n⟩, order n!/2
///   quaternion8   the eight-element quaternion group in its regular
///                 degree-8 representation
/// Throws FormatError for unknown names/bad parameters, OrderCapError when
/// the result would exceed the cap.
FiniteGroup build_family(const std::string& name, int parameter,
                         int order_cap = kDefaultOrderCap);

/// Parses a family spec string: `<name>:<parameter>`, `quaternion8`, or
/// `product(<spec>,<spec>)` with nesting, e.g.
/// `product(symmetric:3,product(cyclic:2,cyclic:2))`.
FiniteGroup build_family_spec(const std::string& spec, int order_cap = kDefaultOrderCap);

/// Direct product. Permutation-built factors give a permutation-built
/// product acting on the disjoint union of their points; otherwise the
/// product is table-built with pair labels.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           int order_cap = kDefaultOrderCap);

}  // namespace hullkit

#endif  // HULLKIT_FAMILIES_HPP
