#include "sts/system.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "sts/error.hpp"

namespace sts {

Triple Triple::sorted(int x, int y, int z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return {x, y, z};
}

namespace {

std::string describe(const Triple& t) {
  return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
         std::to_string(t.c) + "}";
}

}  // namespace

TripleSystem::Index TripleSystem::make_pair_index(
    int n, const std::vector<Triple>& triples) {
  Index index;
  const std::size_t pairs = pair_count(n);
  index.offsets.assign(pairs + 1, 0);
  for (const Triple& t : triples) {
    ++index.offsets[pair_rank(n, t.a, t.b) + 1];
    ++index.offsets[pair_rank(n, t.a, t.c) + 1];
    ++index.offsets[pair_rank(n, t.b, t.c) + 1];
  }
  for (std::size_t i = 0; i < pairs; ++i) {
    index.offsets[i + 1] += index.offsets[i];
  }
  index.items.resize(index.offsets[pairs]);
  std::vector<std::uint32_t> cursor(index.offsets.begin(),
                                    index.offsets.end() - 1);
  for (std::uint32_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    index.items[cursor[pair_rank(n, t.a, t.b)]++] = i;
    index.items[cursor[pair_rank(n, t.a, t.c)]++] = i;
    index.items[cursor[pair_rank(n, t.b, t.c)]++] = i;
  }
  return index;
}

TripleSystem::Index TripleSystem::make_vertex_index(
    int n, const std::vector<Triple>& triples) {
  Index index;
  index.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Triple& t : triples) {
    for (int v : t.vertices()) ++index.offsets[v + 1];
  }
  for (int v = 0; v < n; ++v) index.offsets[v + 1] += index.offsets[v];
  index.items.resize(index.offsets[n]);
  std::vector<std::uint32_t> cursor(index.offsets.begin(),
                                    index.offsets.end() - 1);
  for (std::uint32_t i = 0; i < triples.size(); ++i) {
    for (int v : triples[i].vertices()) index.items[cursor[v]++] = i;
  }
  return index;
}

std::span<const std::uint32_t> TripleSystem::triples_containing(int u,
                                                                int v) const {
  const std::size_t r = pair_rank(n_, u, v);
  const auto begin = pair_index_.offsets[r];
  const auto end = pair_index_.offsets[r + 1];
  return {pair_index_.items.data() + begin, end - begin};
}

std::span<const std::uint32_t> TripleSystem::triples_at(int v) const {
  const auto begin = vertex_index_.offsets[v];
  const auto end = vertex_index_.offsets[v + 1];
  return {vertex_index_.items.data() + begin, end - begin};
}

bool TripleSystem::is_linear() const {
  for (std::size_t r = 0; r + 1 < pair_index_.offsets.size(); ++r) {
    if (pair_index_.offsets[r + 1] - pair_index_.offsets[r] > 1) return false;
  }
  return true;
}

bool TripleSystem::pair_index_consistent() const {
  return make_pair_index(n_, triples_) == pair_index_ &&
         make_vertex_index(n_, triples_) == vertex_index_;
}

TripleSystem build_system(int n, std::span<const Triple> triples) {
  if (n < 0) throw StsError(ErrorCode::kBadOrder, "negative vertex count");
  TripleSystem s;
  s.n_ = n;
  s.triples_.reserve(triples.size());
  std::set<Triple> seen;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple t = Triple::sorted(triples[i].a, triples[i].b, triples[i].c);
    if (t.a < 0 || t.c >= n) {
      throw StsError(ErrorCode::kVertexOutOfRange,
                     "triple " + describe(t) + " has a vertex outside [0, " +
                         std::to_string(n) + ")",
                     i);
    }
    if (t.a == t.b || t.b == t.c) {
      throw StsError(ErrorCode::kDegenerateTriple,
                     "triple " + describe(t) + " repeats a vertex", i);
    }
    if (!seen.insert(t).second) {
      throw StsError(ErrorCode::kDuplicateTriple,
                     "triple " + describe(t) + " listed twice", i);
    }
    s.triples_.push_back(t);
  }
  s.pair_index_ = TripleSystem::make_pair_index(n, s.triples_);
  s.vertex_index_ = TripleSystem::make_vertex_index(n, s.triples_);
  return s;
}

TripleSystem build_system(int n,
                          std::initializer_list<std::array<int, 3>> triples) {
  std::vector<Triple> list;
  list.reserve(triples.size());
  for (const auto& t : triples) list.push_back({t[0], t[1], t[2]});
  return build_system(n, list);
}

int pair_degree_min(const TripleSystem& s) {
  int best = -1;
  for (int u = 0; u < s.n(); ++u) {
    for (int v = u + 1; v < s.n(); ++v) {
      const int d = s.pair_degree(u, v);
      if (best < 0 || d < best) best = d;
    }
  }
  return best < 0 ? 0 : best;
}

std::string_view construction_name(Construction c) {
  switch (c) {
    case Construction::kUnknown: return "unknown";
    case Construction::kFano: return "fano";
    case Construction::kS9: return "s9";
    case Construction::kBose: return "bose";
    case Construction::kSkolem: return "skolem";
    case Construction::kRandom: return "random";
  }
  return "unknown";
}

std::optional<Construction> parse_construction(std::string_view name) {
  for (Construction c :
       {Construction::kUnknown, Construction::kFano, Construction::kS9,
        Construction::kBose, Construction::kSkolem, Construction::kRandom}) {
    if (construction_name(c) == name) return c;
  }
  return std::nullopt;
}

bool admissible_order(int n) { return n % 6 == 1 || n % 6 == 3; }

SteinerSystem validate_steiner(TripleSystem s, Construction c,
                               std::vector<TripleType> labels) {
  const int n = s.n();
  if (n < 0 || !admissible_order(n)) {
    throw StsError(ErrorCode::kBadOrder,
                   "n = " + std::to_string(n) + " is not 1 or 3 mod 6");
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = s.pair_degree(u, v);
      const std::string where =
          "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (d == 0) {
        throw StsError(ErrorCode::kPairUncovered, "pair " + where, {u, v});
      }
      if (d > 1) {
        throw StsError(ErrorCode::kPairMulticovered,
                       "pair " + where + " lies in " + std::to_string(d) +
                           " triples",
                       {u, v});
      }
    }
  }
  if (!labels.empty() && labels.size() != s.size()) {
    throw StsError(ErrorCode::kMissingLabels,
                   "label count does not match triple count");
  }
  SteinerSystem out;
  out.base_ = std::move(s);
  out.construction_ = c;
  out.labels_ = std::move(labels);
  return out;
}

EdgeColoring::EdgeColoring(const TripleSystem& system, int r,
                           std::vector<int> colors)
    : system_(&system), r_(r), colors_(std::move(colors)) {
  if (r_ < 1) throw StsError(ErrorCode::kBadColorCount, "r must be >= 1");
  if (colors_.size() != system.size()) {
    throw StsError(ErrorCode::kBadColorCount,
                   "coloring has " + std::to_string(colors_.size()) +
                       " entries for " + std::to_string(system.size()) +
                       " triples");
  }
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (colors_[i] < 0 || colors_[i] >= r_) {
      throw StsError(ErrorCode::kBadColorCount,
                     "color " + std::to_string(colors_[i]) + " outside [0, " +
                         std::to_string(r_) + ")",
                     i);
    }
  }
}

HoleCertificate HoleCertificate::from_parts(
    std::vector<std::vector<int>> parts) {
  HoleCertificate h;
  h.k = static_cast<int>(parts.size());
  h.a = parts.empty() ? 0 : static_cast<int>(parts.front().size());
  for (auto& p : parts) std::sort(p.begin(), p.end());
  h.parts = std::move(parts);
  return h;
}

bool verify_hole(const TripleSystem& s, const HoleCertificate& h) {
  if (h.k < 1 || static_cast<int>(h.parts.size()) != h.k) {
    throw StsError(ErrorCode::kMalformedCertificate,
                   "part count does not match k");
  }
  std::vector<int> part_of(static_cast<std::size_t>(s.n()), -1);
  for (int i = 0; i < h.k; ++i) {
    if (static_cast<int>(h.parts[i].size()) != h.a) {
      throw StsError(ErrorCode::kMalformedCertificate,
                     "part " + std::to_string(i) + " has size " +
                         std::to_string(h.parts[i].size()) + ", expected " +
                         std::to_string(h.a));
    }
    for (int v : h.parts[i]) {
      if (v < 0 || v >= s.n()) {
        throw StsError(ErrorCode::kMalformedCertificate,
                       "vertex " + std::to_string(v) + " out of range");
      }
      if (part_of[v] != -1) {
        throw StsError(ErrorCode::kMalformedCertificate,
                       "vertex " + std::to_string(v) + " in two parts");
      }
      part_of[v] = i;
    }
  }
  // A triple has three vertices, so it can meet all k parts only if k <= 3.
  if (h.a == 0 || h.k > 3) return true;
  for (const Triple& t : s.triples()) {
    unsigned touched = 0;
    for (int v : t.vertices()) {
      if (part_of[v] >= 0) touched |= 1u << part_of[v];
    }
    if (touched == (1u << h.k) - 1) return false;
  }
  return true;
}

}  // namespace sts
