#include <algorithm>

#include "sts/detail/disjoint_sets.hpp"
#include "sts/system.hpp"

namespace sts {

ComponentSet mono_components(const EdgeColoring& c) {
  const TripleSystem& s = c.system();
  const int n = s.n();
  ComponentSet out;
  out.components.resize(c.r());
  out.spanned.resize(c.r());

  for (int color = 0; color < c.r(); ++color) {
    detail::DisjointSets sets(n);
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (c.color(i) != color) continue;
      const Triple& t = s.triple(i);
      sets.unite(t.a, t.b);
      sets.unite(t.a, t.c);
      touched[t.a] = touched[t.b] = touched[t.c] = 1;
    }
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    auto& comps = out.components[color];
    for (int v = 0; v < n; ++v) {
      if (!touched[v]) continue;
      out.spanned[color].push_back(v);
      const int root = sets.find(v);
      if (slot[root] < 0) {
        slot[root] = static_cast<int>(comps.size());
        comps.emplace_back();
      }
      comps[slot[root]].push_back(v);
    }
  }
  return out;
}

LargestComponent largest_mono_component(const EdgeColoring& c) {
  const ComponentSet set = mono_components(c);
  LargestComponent best;
  bool found = false;
  for (int color = 0; color < c.r(); ++color) {
    for (const auto& comp : set.components[color]) {
      const int size = static_cast<int>(comp.size());
      // Strict comparisons keep the lowest color on ties; within a color,
      // components are visited by smallest vertex, so the first one of a
      // given size is also lexicographically smallest.
      if (!found || size > best.size ||
          (size == best.size && color == best.color &&
           comp < best.vertices)) {
        best = {size, color, comp};
        found = true;
      }
    }
  }
  if (!found && c.system().n() > 0) best = {1, 0, {0}};
  return best;
}

}  // namespace sts
