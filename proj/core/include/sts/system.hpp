#ifndef STS_SYSTEM_HPP
#define STS_SYSTEM_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace sts {

/// A 3-subset of the vertex set, always stored ascending.
struct Triple {
  int a = 0;
  int b = 0;
  int c = 0;

  /// Sorts the three vertices. Does not check distinctness.
  static Triple sorted(int x, int y, int z);

  bool contains(int v) const { return v == a || v == b || v == c; }
  std::array<int, 3> vertices() const { return {a, b, c}; }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Index of the unordered pair {u, v} (u != v) in the lexicographic list of
/// pairs of [0, n).
constexpr std::size_t pair_rank(int n, int u, int v) {
  if (u > v) {
    const int t = u;
    u = v;
    v = t;
  }
  const auto uu = static_cast<std::size_t>(u);
  const auto nn = static_cast<std::size_t>(n);
  return uu * (2 * nn - uu - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// A 3-uniform hypergraph on the vertices [0, n) with a pair index: for every
/// unordered pair, the indices of the triples that contain it. Immutable once
/// built; use build_system() to construct one.
class TripleSystem {
 public:
  TripleSystem() = default;

  int n() const { return n_; }
  std::size_t size() const { return triples_.size(); }
  const std::vector<Triple>& triples() const { return triples_; }
  const Triple& triple(std::size_t i) const { return triples_[i]; }

  /// Triple indices containing the pair {u, v}, in ascending order.
  std::span<const std::uint32_t> triples_containing(int u, int v) const;
  int pair_degree(int u, int v) const {
    return static_cast<int>(triples_containing(u, v).size());
  }
  /// Triple indices containing vertex v, in ascending order.
  std::span<const std::uint32_t> triples_at(int v) const;
  int degree(int v) const { return static_cast<int>(triples_at(v).size()); }

  /// True when every pair lies in at most one triple.
  bool is_linear() const;

  /// Rebuilds the pair index from the triple list and compares it with the
  /// stored one.
  bool pair_index_consistent() const;

  friend bool operator==(const TripleSystem& x, const TripleSystem& y) {
    return x.n_ == y.n_ && x.triples_ == y.triples_;
  }

 private:
  friend TripleSystem build_system(int n, std::span<const Triple> triples);

  struct Index {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> items;
    friend bool operator==(const Index&, const Index&) = default;
  };
  static Index make_pair_index(int n, const std::vector<Triple>& triples);
  static Index make_vertex_index(int n, const std::vector<Triple>& triples);

  int n_ = 0;
  std::vector<Triple> triples_;
  Index pair_index_;
  Index vertex_index_;
};

/// Normalizes each triple to ascending order and builds the pair index.
/// Triple order is preserved. Throws StsError with kVertexOutOfRange,
/// kDegenerateTriple (repeated vertex) or kDuplicateTriple.
TripleSystem build_system(int n, std::span<const Triple> triples);
TripleSystem build_system(int n, std::initializer_list<std::array<int, 3>> triples);

/// Minimum number of triples over all vertex pairs (delta_2). Requires n >= 2.
int pair_degree_min(const TripleSystem& s);

enum class TripleType : std::uint8_t { kUntyped, kType1, kType2, kType3 };

enum class Construction : std::uint8_t {
  kUnknown,
  kFano,
  kS9,
  kBose,
  kSkolem,
  kRandom,
};

std::string_view construction_name(Construction c);
std::optional<Construction> parse_construction(std::string_view name);

/// A TripleSystem in which every pair lies in exactly one triple, optionally
/// carrying the construction that produced it and one type label per triple.
class SteinerSystem {
 public:
  const TripleSystem& system() const { return base_; }
  int n() const { return base_.n(); }
  std::size_t size() const { return base_.size(); }
  Construction construction() const { return construction_; }
  /// Empty when the system carries no labels.
  const std::vector<TripleType>& labels() const { return labels_; }
  bool labeled() const { return !labels_.empty(); }
  /// The single-triple system on three vertices.
  bool degenerate() const { return base_.n() == 3; }

  operator const TripleSystem&() const { return base_; }  // NOLINT

 private:
  friend SteinerSystem validate_steiner(TripleSystem s, Construction c,
                                        std::vector<TripleType> labels);

  TripleSystem base_;
  Construction construction_ = Construction::kUnknown;
  std::vector<TripleType> labels_;
};

/// Checks the order condition (n = 1, 3 mod 6) and that every pair is
/// covered exactly once, scanning pairs lexicographically and reporting the
/// first violation as kPairUncovered or kPairMulticovered.
SteinerSystem validate_steiner(TripleSystem s,
                               Construction c = Construction::kUnknown,
                               std::vector<TripleType> labels = {});

bool admissible_order(int n);

/// An r-coloring of the triples of a system. Holds a non-owning pointer to
/// the system, which must outlive the coloring.
class EdgeColoring {
 public:
  EdgeColoring(const TripleSystem& system, int r, std::vector<int> colors);

  const TripleSystem& system() const { return *system_; }
  int r() const { return r_; }
  const std::vector<int>& colors() const { return colors_; }
  int color(std::size_t triple) const { return colors_[triple]; }

 private:
  const TripleSystem* system_;
  int r_;
  std::vector<int> colors_;
};

/// k pairwise disjoint vertex sets of common size a such that no triple
/// meets all of them. Parts are kept sorted.
struct HoleCertificate {
  int k = 0;
  int a = 0;
  std::vector<std::vector<int>> parts;

  static HoleCertificate from_parts(std::vector<std::vector<int>> parts);
};

/// Throws kMalformedCertificate if parts overlap, differ in size, or leave
/// [0, n). Otherwise returns whether no triple meets all k parts.
bool verify_hole(const TripleSystem& s, const HoleCertificate& h);

/// Per color: the connected components of the shadow graph of that color's
/// triples, and the set of vertices touched by that color. Components are
/// sorted vertex lists ordered by smallest vertex.
struct ComponentSet {
  std::vector<std::vector<std::vector<int>>> components;
  std::vector<std::vector<int>> spanned;
};

ComponentSet mono_components(const EdgeColoring& c);

struct LargestComponent {
  int size = 0;
  int color = 0;
  std::vector<int> vertices;
};

/// Largest monochromatic component; ties go to the lowest color and then the
/// lexicographically smallest vertex set. A coloring of a system without
/// triples reports the isolated vertex 0 (size 1), or size 0 when n = 0.
LargestComponent largest_mono_component(const EdgeColoring& c);

}  // namespace sts

#endif  // STS_SYSTEM_HPP
