#include "hullkit/subgroups.hpp"

#include <algorithm>
#include <map>

#include "hullkit/errors.hpp"

namespace hullkit {

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g, int max_generators) {
  if (max_generators < 1) throw FormatError("max_generators must be at least 1");

  // element set -> generating subset that first produced it
  std::map<std::vector<Elem>, std::vector<Elem>> found;
  found[{g.identity()}] = {};

  std::vector<Elem> whole(g.order());
  for (Elem e = 0; e < g.order(); ++e) whole[e] = e;
  found.try_emplace(whole, g.generators());

  std::vector<Elem> subset;
  // depth-first over ascending generator subsets, so the recorded witness
  // generators are reproducible
  auto expand = [&](auto&& self, Elem from) -> void {
    for (Elem e = from; e < g.order(); ++e) {
      subset.push_back(e);
      Subgroup s = Subgroup::closure(g, subset);
      found.try_emplace(s.elements(), subset);
      if (static_cast<int>(subset.size()) < max_generators) self(self, e + 1);
      subset.pop_back();
    }
  };
  expand(expand, 0);

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& kv : found) out.push_back(Subgroup::closure(g, kv.second));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> enumerate_normal_subgroups(const FiniteGroup& g, int max_generators) {
  std::vector<Subgroup> out;
  for (Subgroup& s : enumerate_subgroups(g, max_generators))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

}  // namespace hullkit
