#ifndef STS_CONSTRUCTIONS_HPP
#define STS_CONSTRUCTIONS_HPP

#include <optional>

#include "sts/quasigroup.hpp"
#include "sts/system.hpp"

namespace sts {

// Vertex encodings. These are part of the file-level contract: a coloring or
// hole written for a Bose system on one machine means the same thing
// everywhere.
//
//   Bose   (n = 6k+3): (a, i) -> 3a + i,      a in [0, 2k+1), i in {0,1,2}
//   Skolem (n = 6k+1): infinity -> 0, (a, i) -> 1 + 3a + i, a in [0, 2k)
constexpr int bose_vertex(int a, int layer) { return 3 * a + layer; }
constexpr int skolem_infinity() { return 0; }
constexpr int skolem_vertex(int a, int layer) { return 1 + 3 * a + layer; }

/// Bose triple system on n = 6k+3 >= 9 points. Without a quasigroup, uses
/// idempotent_quasigroup(2k+1). Labels: Type1 = {(a,0),(a,1),(a,2)},
/// Type2 = {(a,i),(b,i),(a o b,i+1)}.
SteinerSystem bose(int n, const std::optional<Quasigroup>& q = std::nullopt);

/// Skolem triple system on n = 6k+1 >= 7 points. Without a quasigroup, uses
/// half_idempotent_quasigroup(2k). Labels: Type1 = {(a,0),(a,1),(a,2)} for
/// a < k, Type2 = {inf,(k+a,i),(a,i+1)} for a < k, Type3 as in Bose.
SteinerSystem skolem(int n, const std::optional<Quasigroup>& q = std::nullopt);

/// Lines {i, i+1, i+3} mod 7.
SteinerSystem fano();
/// Lines of the affine plane AG(2,3) with (x, y) -> 3x + y.
SteinerSystem s9();

/// Validates s and, for Bose and Skolem systems, re-derives the per-triple
/// labels from the vertex encoding. Throws kMissingLabels if a triple does
/// not fit the declared construction.
SteinerSystem attach_labels(TripleSystem s, Construction construction);

}  // namespace sts

#endif  // STS_CONSTRUCTIONS_HPP
