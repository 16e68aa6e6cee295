#include "hullkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "hullkit/errors.hpp"

namespace hullkit {

Perm::Perm(int degree) : degree_(degree), images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(int degree, std::vector<int> images) : degree_(degree), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != degree)
    throw FormatError("permutation image table has wrong length");
  std::vector<char> seen(degree, 0);
  for (int x : images_) {
    if (x < 0 || x >= degree)
      throw FormatError("permutation image out of range: " + std::to_string(x + 1));
    if (seen[x])
      throw FormatError("not a permutation: point " + std::to_string(x + 1) + " hit twice");
    seen[x] = 1;
  }
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree_; ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<int> img(degree_);
  for (int x = 0; x < degree_; ++x) img[x] = rhs.images_[images_[x]];
  return Perm(degree_, std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(degree_);
  for (int x = 0; x < degree_; ++x) img[images_[x]] = x;
  return Perm(degree_, std::move(img));
}

Perm Perm::parse(int degree, const std::string& text) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw FormatError("empty permutation");
  bool saw_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw FormatError("expected '(' in cycle notation near \"" + text.substr(i) + "\"");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw FormatError("unterminated cycle in \"" + text + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw FormatError("expected point or ')' in cycle notation near \"" + text.substr(i) + "\"");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value < 1 || value > degree)
        throw FormatError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      cycle.push_back(value - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;  // both "(1 2)" and "(1,2)" accepted
    }
    saw_cycle = true;
    for (int p : cycle) {
      if (used[p])
        throw FormatError("point " + std::to_string(p + 1) + " appears in two cycles");
      used[p] = 1;
    }
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) img[cycle[k]] = cycle[k + 1];
    if (cycle.size() >= 2) img[cycle.back()] = cycle.front();
  }
  if (!saw_cycle) throw FormatError("no cycles in \"" + text + "\"");
  return Perm(degree, std::move(img));
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<char> done(degree_, 0);
  bool any = false;
  for (int start = 0; start < degree_; ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (x + 1);
      done[x] = 1;
      x = images_[x];
      first = false;
    } while (x != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace hullkit
