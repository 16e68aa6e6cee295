#ifndef HULLKIT_SUBGROUPS_HPP
#define HULLKIT_SUBGROUPS_HPP

#include <vector>

#include "hullkit/group.hpp"

namespace hullkit {

/// All distinct subgroups obtainable as closures of at most
/// `max_generators` elements, plus the trivial subgroup and G itself.
/// Deterministic order: ascending by (order, element list). For groups
/// whose proper subgroups all need ≤ max_generators generators this is
/// the complete subgroup lattice.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, int max_generators);

/// The normal ones, in the same order.
std::vector<Subgroup> enumerate_normal_subgroups(const FiniteGroup& g, int max_generators);

}  // namespace hullkit

#endif  // HULLKIT_SUBGROUPS_HPP
