#ifndef STS_COLORINGS_HPP
#define STS_COLORINGS_HPP

#include <array>
#include <optional>
#include <vector>

#include "sts/system.hpp"

namespace sts {

/// Gives each triple the smallest i such that it misses part i of the hole.
/// Every color-i component then avoids X_i, so no component exceeds n - a.
/// Throws kInvalidHole unless verify_hole accepts h (and k >= 2).
EdgeColoring hole_coloring(const TripleSystem& s, const HoleCertificate& h);

/// Type 2 triple {(a,i),(b,i),(a o b,i+1)} gets color (i-1) mod 3, Type 1
/// triple (a,*) gets a mod 3. Each color spans at most
/// 4k+2 + ceil((2k+1)/3) vertices for n = 6k+3. kMissingLabels unless s
/// carries Bose labels.
EdgeColoring bose_coloring(const SteinerSystem& s);

/// Type 2/3 triples get the layer their vertices do not use; Type 1 triple
/// (a,*) gets a mod 3. Each color spans at most ceil(k/3) + 4k + 1 vertices
/// for n = 6k+1. kMissingLabels unless s carries Skolem labels.
EdgeColoring skolem_coloring(const SteinerSystem& s);

int bose_span_bound(int n);
int skolem_span_bound(int n);

/// Vertex 3-coloring (classes 1, 2, 3) in which every triple sees exactly
/// two classes.
struct Bicoloring {
  std::vector<int> classes;
  /// Class sizes sorted ascending.
  std::array<int, 3> sizes{};
};

/// Throws kMonochromaticTriple or kRainbowTriple (with the triple index) on
/// the first offending triple.
Bicoloring verify_bicoloring(const TripleSystem& s, std::vector<int> classes);

/// Lexicographically first bicoloring with vertex 0 in class 1, or nullopt.
/// For n > 3 all three classes must be non-empty. Exhaustive; meant for
/// n <= 15.
std::optional<Bicoloring> bicoloring_search(const TripleSystem& s);

struct BicoloringBound {
  HoleCertificate hole;
  int bound = 0;
};

/// Cuts each class down to its a lowest vertices (a = smallest class size)
/// to get a 3-partite hole, so mc_3 <= n - a = b + c. kEmptyClass if a class
/// is empty.
BicoloringBound bicoloring_to_bound(const TripleSystem& s,
                                    const Bicoloring& bi);

/// The same bound from class sizes alone: b + c with a <= b <= c.
int bicoloring_bound(std::array<int, 3> sizes);

}  // namespace sts

#endif  // STS_COLORINGS_HPP
