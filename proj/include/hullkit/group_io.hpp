#ifndef HULLKIT_GROUP_IO_HPP
#define HULLKIT_GROUP_IO_HPP

#include <string>

#include "hullkit/group.hpp"

namespace hullkit {

/// Parses a group description document. Two formats, chosen by the header
/// line (the full grammar is documented in the README):
///
///   format: permgroup v1        format: cayley v1
///   degree: 3                   order: 2
///   (1 2)                       0 1
///   (1 2 3)                     1 0
///
/// Blank lines and lines starting with '#' are ignored. Cayley rows list
/// row·column products by element id; element 0 must be the identity.
/// Errors are FormatError with the offending line number and, for bad
/// tables, the violated axiom with a witness triple; OrderCapError when
/// the group would exceed the cap.
FiniteGroup parse_group_file(const std::string& text, int order_cap = kDefaultOrderCap);

/// Canonical `cayley v1` serialization. Parsing it back yields a group
/// with an identical product table (ids and products are preserved;
/// labels revert to decimal ids).
std::string to_cayley_file(const FiniteGroup& g);

/// Reads and parses a file from disk; FormatError mentions the path.
FiniteGroup load_group_file(const std::string& path, int order_cap = kDefaultOrderCap);

}  // namespace hullkit

#endif  // HULLKIT_GROUP_IO_HPP
