#include "hullkit/families.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

Perm cycle_of(int degree, const std::vector<int>& points) {
  // points are 0-based here; helper for hand-built generators
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (std::size_t i = 0; i < points.size(); ++i)
    img[points[i]] = points[(i + 1) % points.size()];
  return Perm(degree, std::move(img));
}

FiniteGroup build_cyclic(int n, int cap) {
  if (n == 1) return FiniteGroup::from_permutations(1, {}, cap);
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i;
  return FiniteGroup::from_permutations(n, {cycle_of(n, pts)}, cap);
}

FiniteGroup build_dihedral(int n, int cap) {
  if (n == 1) return FiniteGroup::from_permutations(2, {cycle_of(2, {0, 1})}, cap);
  if (n == 2)
    return FiniteGroup::from_permutations(4, {cycle_of(4, {0, 1}), cycle_of(4, {2, 3})}, cap);
  std::vector<int> rot_pts(n);
  for (int i = 0; i < n; ++i) rot_pts[i] = i;
  std::vector<int> refl(n);
  refl[0] = 0;
  for (int i = 1; i < n; ++i) refl[i] = n - i;
  return FiniteGroup::from_permutations(n, {cycle_of(n, rot_pts), Perm(n, std::move(refl))},
                                        cap);
}

FiniteGroup build_symmetric(int n, int cap) {
  if (n == 1) return FiniteGroup::from_permutations(1, {}, cap);
  if (n == 2) return FiniteGroup::from_permutations(2, {cycle_of(2, {0, 1})}, cap);
  std::vector<int> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = i;
  return FiniteGroup::from_permutations(n, {cycle_of(n, {0, 1}), cycle_of(n, pts)}, cap);
}

FiniteGroup build_alternating(int n, int cap) {
  if (n <= 2) return FiniteGroup::from_permutations(std::max(n, 1), {}, cap);
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) gens.push_back(cycle_of(n, {0, 1, k}));
  return FiniteGroup::from_permutations(n, gens, cap);
}

FiniteGroup build_quaternion8(int cap) {
  // regular representation on the eight unit quaternions
  // 1, -1, i, -i, j, -j, k, -k (points 1..8): right multiplication by i
  // and by j
  Perm a = Perm::parse(8, "(1 3 2 4)(5 8 6 7)");
  Perm b = Perm::parse(8, "(1 5 2 6)(3 7 4 8)");
  return FiniteGroup::from_permutations(8, {a, b}, cap);
}

/// Splits "a,b" at the single top-level comma of a product argument list.
std::pair<std::string, std::string> split_product_args(const std::string& body) {
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    else if (body[i] == ')') --depth;
    else if (body[i] == ',' && depth == 0)
      return {body.substr(0, i), body.substr(i + 1)};
  }
  throw FormatError("product spec needs two comma-separated factors: product(" + body + ")");
}

}  // namespace

FiniteGroup build_family(const std::string& name, int parameter, int order_cap) {
  if (name == "quaternion8") return build_quaternion8(order_cap);
  if (parameter < 1)
    throw FormatError("family " + name + " needs a positive parameter, got " +
                      std::to_string(parameter));
  if (name == "cyclic") return build_cyclic(parameter, order_cap);
  if (name == "dihedral") return build_dihedral(parameter, order_cap);
  if (name == "symmetric") return build_symmetric(parameter, order_cap);
  if (name == "alternating") return build_alternating(parameter, order_cap);
  throw FormatError("unknown family '" + name +
                    "' (known: cyclic, dihedral, symmetric, alternating, quaternion8, "
                    "product(a,b))");
}

FiniteGroup build_family_spec(const std::string& spec, int order_cap) {
  std::string s = spec;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c) != 0; }),
          s.end());
  if (s.empty()) throw FormatError("empty family spec");

  if (s.rfind("product(", 0) == 0) {
    if (s.back() != ')') throw FormatError("unterminated product spec: " + spec);
    auto [left, right] = split_product_args(s.substr(8, s.size() - 9));
    return direct_product(build_family_spec(left, order_cap),
                          build_family_spec(right, order_cap), order_cap);
  }

  std::size_t colon = s.find(':');
  if (colon == std::string::npos) return build_family(s, 0, order_cap);
  std::string name = s.substr(0, colon);
  std::string param = s.substr(colon + 1);
  if (param.empty() || !std::all_of(param.begin(), param.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
      }))
    throw FormatError("family parameter must be a positive integer: " + spec);
  return build_family(name, std::stoi(param), order_cap);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, int order_cap) {
  long long product_order = static_cast<long long>(a.order()) * b.order();
  if (product_order > order_cap)
    throw OrderCapError("group too large: direct product of order " +
                            std::to_string(product_order) + " exceeds the order cap " +
                            std::to_string(order_cap),
                        order_cap);

  if (a.degree() > 0 && b.degree() > 0) {
    // act on the disjoint union of the two point sets
    int da = a.degree(), db = b.degree();
    std::vector<Perm> gens;
    for (Elem e : a.generators()) {
      std::vector<int> img(da + db);
      for (int i = 0; i < da; ++i) img[i] = a.perms()[e][i];
      for (int i = 0; i < db; ++i) img[da + i] = da + i;
      gens.emplace_back(da + db, std::move(img));
    }
    for (Elem e : b.generators()) {
      std::vector<int> img(da + db);
      for (int i = 0; i < da; ++i) img[i] = i;
      for (int i = 0; i < db; ++i) img[da + i] = da + b.perms()[e][i];
      gens.emplace_back(da + db, std::move(img));
    }
    FiniteGroup g = FiniteGroup::from_permutations(da + db, gens, order_cap);
    if (g.order() != product_order)
      throw InternalCheckError("direct product closure has order " + std::to_string(g.order()) +
                               ", expected " + std::to_string(product_order));
    return g;
  }
  return direct_product_table(a, b);
}

}  // namespace hullkit
