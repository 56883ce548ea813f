#include "sts/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "sts/detail/disjoint_sets.hpp"
#include "sts/error.hpp"

namespace sts {
namespace {

// Color sets (bit c = color c) on every pair of the complete shadow.
class Shadow {
 public:
  Shadow(const TripleSystem& s, const EdgeColoring& c)
      : n_(s.n()), bits_(static_cast<std::size_t>(n_) * n_, 0) {
    for (std::size_t t = 0; t < s.size(); ++t) {
      const Triple& tr = s.triple(t);
      const auto bit = static_cast<unsigned char>(1u << c.color(t));
      add(tr.a, tr.b, bit);
      add(tr.a, tr.c, bit);
      add(tr.b, tr.c, bit);
    }
  }

  unsigned colors(int u, int v) const { return bits_[u * n_ + v]; }
  bool has(int u, int v, int color) const {
    return (colors(u, v) >> color) & 1u;
  }
  int n() const { return n_; }

 private:
  void add(int u, int v, unsigned char bit) {
    bits_[u * n_ + v] |= bit;
    bits_[v * n_ + u] |= bit;
  }

  int n_;
  std::vector<unsigned char> bits_;
};

std::vector<int> sorted_difference(const std::vector<int>& a,
                                   const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a,
                                     const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool meets(const std::vector<int>& comp, const std::vector<char>& in) {
  return std::any_of(comp.begin(), comp.end(), [&](int v) { return in[v]; });
}

// Is `set` connected using only pairs inside it that carry `color`?
bool connected_in(const Shadow& sh, const std::vector<int>& set, int color) {
  if (set.empty()) return false;
  detail::DisjointSets ds(sh.n());
  int joined = 1;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (sh.has(set[i], set[j], color) && ds.find(set[i]) != ds.find(set[j])) {
        ds.unite(set[i], set[j]);
        ++joined;
      }
    }
  }
  return joined == static_cast<int>(set.size());
}

const char* kPartName[4] = {"W", "X", "Y", "Z"};

}  // namespace

DecompositionResult decompose_3coloring(const TripleSystem& s,
                                        const EdgeColoring& c) {
  if (c.r() != 3) {
    throw StsError(ErrorCode::kBadColorCount, "decomposition needs r = 3");
  }
  if (s.n() >= 2 && pair_degree_min(s) < 1) {
    throw StsError(ErrorCode::kPairUncovered, "every pair must be covered");
  }
  const int n = s.n();
  DecompositionResult out;
  const LargestComponent b = largest_mono_component(c);
  out.blue = b.color;
  if (b.size == n) {
    out.kind = DecompositionCase::kL1;
    out.red = (out.blue + 1) % 3;
    out.green = (out.blue + 2) % 3;
    out.spanning = b.vertices;
    return out;
  }

  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  for (int v : b.vertices) in_b[v] = 1;
  std::vector<char> in_u(static_cast<std::size_t>(n), 0);
  std::vector<int> u;
  for (int v = 0; v < n; ++v) {
    if (!in_b[v]) {
      in_u[v] = 1;
      u.push_back(v);
    }
  }

  // R: the largest component of another color meeting both B and U. Being
  // largest among those, it is not properly contained in any of them.
  const ComponentSet comps = mono_components(c);
  const std::vector<int>* r_comp = nullptr;
  int r_color = -1;
  for (int color = 0; color < 3; ++color) {
    if (color == out.blue) continue;
    for (const auto& comp : comps.components[color]) {
      if (!meets(comp, in_b) || !meets(comp, in_u)) continue;
      if (!r_comp || comp.size() > r_comp->size() ||
          (comp.size() == r_comp->size() && color == r_color &&
           comp < *r_comp)) {
        r_comp = &comp;
        r_color = color;
      }
    }
  }
  if (!r_comp) {
    throw StsError(ErrorCode::kPairUncovered, "no component crosses B and U");
  }
  out.red = r_color;
  out.green = 3 - out.blue - out.red;

  const std::vector<int>& bv = b.vertices;
  const std::vector<int>& rv = *r_comp;
  const std::vector<int> u_minus_r = sorted_difference(u, rv);
  if (!u_minus_r.empty()) {
    out.kind = DecompositionCase::kL2;
    out.parts = {sorted_intersection(bv, rv), sorted_difference(bv, rv),
                 sorted_intersection(u, rv), u_minus_r};
    return out;
  }

  // G: the green component containing U (and with it B \ R).
  const std::vector<int>* g_comp = nullptr;
  for (const auto& comp : comps.components[out.green]) {
    if (std::binary_search(comp.begin(), comp.end(), u.front())) g_comp = &comp;
  }
  std::vector<int> gv = g_comp ? *g_comp : std::vector<int>{};
  out.kind = DecompositionCase::kL3;
  out.parts = {sorted_intersection(sorted_intersection(bv, rv), gv),
               sorted_difference(bv, gv), sorted_difference(bv, rv), u};
  return out;
}

DecompositionCheck verify_decomposition(const TripleSystem& s,
                                        const EdgeColoring& c,
                                        const DecompositionResult& d) {
  const int n = s.n();
  const Shadow sh(s, c);
  auto fail = [](std::string clause) {
    return DecompositionCheck{false, std::move(clause)};
  };
  const int blue = d.blue;
  const int red = d.red;
  const int green = d.green;
  if (std::min({blue, red, green}) < 0 || std::max({blue, red, green}) > 2 ||
      blue == red || red == green || blue == green) {
    return fail("colors are not a permutation of 0, 1, 2");
  }

  if (d.kind == DecompositionCase::kL1) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    if (d.spanning != all) return fail("L1: component is not spanning");
    if (n > 1 && !connected_in(sh, all, blue)) {
      return fail("L1: component is not monochromatic-connected");
    }
    return {};
  }

  // Partition check.
  std::vector<int> part_of(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < 4; ++p) {
    for (int v : d.parts[p]) {
      if (v < 0 || v >= n) return fail(std::string(kPartName[p]) + ": vertex out of range");
      if (part_of[v] >= 0) return fail("parts overlap");
      part_of[v] = p;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (part_of[v] < 0) return fail("parts do not cover the vertex set");
  }
  const int first_required = d.kind == DecompositionCase::kL2 ? 0 : 1;
  for (int p = first_required; p < 4; ++p) {
    if (d.parts[p].empty()) return fail(std::string(kPartName[p]) + " is empty");
  }

  // Every pair between parts p and q carries exactly `only` (when >= 0) and
  // never carries `never` (when >= 0).
  auto check_pairs = [&](int p, int q, int only, int never) -> DecompositionCheck {
    for (int x : d.parts[p]) {
      for (int y : d.parts[q]) {
        const unsigned set = sh.colors(x, y);
        if (only >= 0 && set != (1u << only)) {
          return fail(std::string("[") + kPartName[p] + "," + kPartName[q] +
                      "] not only color " + std::to_string(only));
        }
        if (never >= 0 && ((set >> never) & 1u)) {
          return fail(std::string("[") + kPartName[p] + "," + kPartName[q] +
                      "] carries color " + std::to_string(never));
        }
      }
    }
    return {};
  };

  enum { W, X, Y, Z };
  if (d.kind == DecompositionCase::kL2) {
    const int rule[6][3] = {{W, X, blue}, {Y, Z, blue}, {W, Y, red},
                            {X, Z, red},  {W, Z, green}, {X, Y, green}};
    for (const auto& r : rule) {
      if (auto check = check_pairs(r[0], r[1], r[2], -1); !check) return check;
    }
    return verify_t2_partition(s, c, to_t2_partition(d));
  }

  // L3.
  auto unite = [&](int p, int q, int r) {
    std::vector<int> out = d.parts[p];
    out.insert(out.end(), d.parts[q].begin(), d.parts[q].end());
    out.insert(out.end(), d.parts[r].begin(), d.parts[r].end());
    std::sort(out.begin(), out.end());
    return out;
  };
  if (!connected_in(sh, unite(W, X, Y), blue)) return fail("W+X+Y not connected in blue");
  if (!connected_in(sh, unite(W, X, Z), red)) return fail("W+X+Z not connected in red");
  if (!connected_in(sh, unite(W, Y, Z), green)) return fail("W+Y+Z not connected in green");
  const int rule[6][4] = {{X, Y, blue, -1},  {X, Z, red, -1},  {Y, Z, green, -1},
                          {W, X, -1, green}, {W, Y, -1, red},  {W, Z, -1, blue}};
  for (const auto& r : rule) {
    if (auto check = check_pairs(r[0], r[1], r[2], r[3]); !check) return check;
  }
  return {};
}

T2Partition to_t2_partition(const DecompositionResult& d) {
  if (d.kind != DecompositionCase::kL2) {
    throw StsError(ErrorCode::kMalformedCertificate,
                   "only an L2 decomposition gives a four-part partition");
  }
  // Colors between the L2 parts W, X, Y, Z.
  int color[4][4];
  for (auto& row : color) std::fill(std::begin(row), std::end(row), -1);
  auto set = [&](int p, int q, int c) { color[p][q] = color[q][p] = c; };
  set(0, 1, d.blue);
  set(2, 3, d.blue);
  set(0, 2, d.red);
  set(1, 3, d.red);
  set(0, 3, d.green);
  set(1, 2, d.green);

  std::array<int, 4> order = {0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
    return d.parts[p].size() > d.parts[q].size();
  });
  T2Partition out;
  for (int i = 0; i < 4; ++i) {
    out.parts[i] = d.parts[order[i]];
    for (int j = 0; j < 4; ++j) out.pair_color[i][j] = color[order[i]][order[j]];
  }
  return out;
}

DecompositionCheck verify_t2_partition(const TripleSystem& s,
                                       const EdgeColoring& c,
                                       const T2Partition& t) {
  for (int i = 0; i + 1 < 4; ++i) {
    if (t.parts[i].size() < t.parts[i + 1].size()) {
      return {false, "parts are not sorted by size"};
    }
  }
  std::vector<int> part_of(static_cast<std::size_t>(s.n()), -1);
  for (int p = 0; p < 4; ++p) {
    for (int v : t.parts[p]) {
      if (v < 0 || v >= s.n() || part_of[v] >= 0) {
        return {false, "parts are not a partition"};
      }
      part_of[v] = p;
    }
  }
  for (int v = 0; v < s.n(); ++v) {
    if (part_of[v] < 0) return {false, "parts are not a partition"};
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned touched = 0;
    for (int v : s.triple(i).vertices()) touched |= 1u << part_of[v];
    const int count = __builtin_popcount(touched);
    if (count >= 3) {
      return {false, "triple " + std::to_string(i) + " touches three parts"};
    }
    if (count == 2) {
      const int p = __builtin_ctz(touched);
      const int q = 31 - __builtin_clz(touched);
      if (c.color(i) != t.pair_color[p][q]) {
        return {false, "triple " + std::to_string(i) + " has the wrong color"};
      }
    }
  }
  return {};
}

}  // namespace sts
