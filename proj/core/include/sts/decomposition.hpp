#ifndef STS_DECOMPOSITION_HPP
#define STS_DECOMPOSITION_HPP

#include <array>
#include <string>
#include <vector>

#include "sts/system.hpp"

namespace sts {

// Structure of a 3-coloring of a system in which every pair is covered.
// Pairs of vertices inherit the set of colors of the triples covering them
// (the "multicolored shadow"); the result describes that complete graph.
//
//   L1: one monochromatic component spans every vertex.
//   L2: partition W, X, Y, Z (all non-empty) with [W,X], [Y,Z] only blue,
//       [W,Y], [X,Z] only red, [W,Z], [X,Y] only green.
//   L3: partition W, X, Y, Z (X, Y, Z non-empty) with W+X+Y connected in
//       blue, W+X+Z connected in red, W+Y+Z connected in green; [X,Y] only
//       blue, [X,Z] only red, [Y,Z] only green; no green on [W,X], no red on
//       [W,Y], no blue on [W,Z].
//
// blue, red and green name the three colors of the coloring in the roles
// they play above.
enum class DecompositionCase { kL1, kL2, kL3 };

struct DecompositionResult {
  DecompositionCase kind = DecompositionCase::kL1;
  int blue = 0;
  int red = 1;
  int green = 2;
  /// L1: the spanning component (color = blue).
  std::vector<int> spanning;
  /// L2/L3: W, X, Y, Z, each sorted.
  std::array<std::vector<int>, 4> parts;
};

/// Requires pair_degree_min(s) >= 1 (kPairUncovered otherwise) and r = 3.
DecompositionResult decompose_3coloring(const TripleSystem& s,
                                        const EdgeColoring& c);

struct DecompositionCheck {
  bool ok = true;
  std::string failed_clause;
  explicit operator bool() const { return ok; }
};

/// Checks every clause of the claimed case against the multicolored shadow;
/// for L2 also checks that no triple touches three parts and that triples
/// meeting two parts carry the pair's color.
DecompositionCheck verify_decomposition(const TripleSystem& s,
                                        const EdgeColoring& c,
                                        const DecompositionResult& d);

/// Four parts sorted by size, largest first, and the color forced on each
/// pair of parts (-1 on the diagonal).
struct T2Partition {
  std::array<std::vector<int>, 4> parts;
  std::array<std::array<int, 4>, 4> pair_color{};
};

/// Only for L2 results.
T2Partition to_t2_partition(const DecompositionResult& d);

/// No triple touches three parts; every triple touching parts i and j has
/// color pair_color[i][j].
DecompositionCheck verify_t2_partition(const TripleSystem& s,
                                       const EdgeColoring& c,
                                       const T2Partition& t);

}  // namespace sts

#endif  // STS_DECOMPOSITION_HPP
