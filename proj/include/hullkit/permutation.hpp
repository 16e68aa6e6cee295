#ifndef HULLKIT_PERMUTATION_HPP
#define HULLKIT_PERMUTATION_HPP

#include <string>
#include <vector>

namespace hullkit {

/// A permutation of {1..degree}, stored as a 0-based image table.
/// Products compose left to right: (p * q) means "apply p, then q",
/// so (p * q)[x] = q[p[x]].
class Perm {
 public:
  explicit Perm(int degree);  // identity
  Perm(int degree, std::vector<int> images);  // throws FormatError unless bijective

  /// Parses cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "()".
  static Perm parse(int degree, const std::string& text);

  int degree() const { return degree_; }
  int operator[](int x) const { return images_[x]; }
  bool is_identity() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool operator==(const Perm& rhs) const = default;
  bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

  /// Canonical cycle notation: cycles sorted by least moved point, each
  /// cycle written starting from its least point; identity is "()".
  std::string cycle_string() const;

  const std::vector<int>& images() const { return images_; }

 private:
  int degree_;
  std::vector<int> images_;
};

}  // namespace hullkit

#endif  // HULLKIT_PERMUTATION_HPP
