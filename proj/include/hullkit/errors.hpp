#ifndef HULLKIT_ERRORS_HPP
#define HULLKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hullkit {

// Malformed input: cycle notation, group files, CLI arguments.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction would exceed the configured group-order cap.
struct OrderCapError : std::runtime_error {
  OrderCapError(std::string msg, long cap_) : std::runtime_error(std::move(msg)), cap(cap_) {}
  long cap;
};

// Quotient by a subgroup that is not normal; carries a witness pair
// (g, n) with g·n·g^-1 outside the subgroup.
struct NotNormalError : std::runtime_error {
  NotNormalError(std::string msg, int g_, int n_) : std::runtime_error(std::move(msg)), g(g_), n(n_) {}
  int g;
  int n;
};

// An internal consistency check failed. These guard statements that are
// mathematically guaranteed (quotient-group exponent facts, product
// preservation of rewriting steps); one firing means a bug, not bad input.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hullkit

#endif  // HULLKIT_ERRORS_HPP
