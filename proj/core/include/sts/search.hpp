#ifndef STS_SEARCH_HPP
#define STS_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sts/system.hpp"

namespace sts {

/// Limits for one search call. Running out of budget is a normal outcome:
/// the result comes back with exact = false and the best value found.
/// Node budgets are deterministic; wall-clock budgets are not.
struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 60.0;
  int parallelism = 1;
};

struct BudgetSpent {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Independent set, hole, or minimizing coloring, depending on the parameter.
using Certificate =
    std::variant<std::monostate, std::vector<int>, HoleCertificate,
                 EdgeColoring>;

/// Value of one parameter. When exact, the certificate attains the value and
/// the adjacent value (value + 1 for alpha and alpha*, value - 1 for mc) has
/// been refuted, either by exhaustive search or by a proven bound.
struct ParamResult {
  int value = 0;
  bool exact = false;
  Certificate certificate;
  BudgetSpent spent;
};

/// Largest vertex set containing no triple. Branch and bound over vertex
/// inclusion with a disjoint-constraint packing bound. Exact search needs
/// n <= 128; larger systems get the greedy bound with exact = false.
ParamResult independence_number(const TripleSystem& s,
                                const SearchBudget& budget = {});

/// True when every pair lies in exactly one triple and n is admissible.
bool is_steiner(const TripleSystem& s);

/// Proven upper bound used to start the hole search: floor(n/3) - 1 for
/// Steiner systems with k = 3 (clamped at 0), floor(n/k) otherwise.
int alpha_star_upper_bound(const TripleSystem& s, int k);

/// Largest a admitting a k-partite hole of size a (kBadK when k < 2).
///
/// Tries a = upper bound, upper bound - 1, ... with an exhaustive
/// backtracking search and stops at the first feasible size. Sizes at or
/// below the local-search lower bound are never re-proved.
ParamResult alpha_star(const TripleSystem& s, int k,
                       const SearchBudget& budget = {});

enum class SearchStatus { kFound, kInfeasible, kBudgetExhausted };

struct HoleSearch {
  SearchStatus status = SearchStatus::kInfeasible;
  std::optional<HoleCertificate> hole;
  BudgetSpent spent;
};

/// Exhaustive search for a k-partite hole of size exactly a. The witness is
/// the first one in the fixed search order, independent of parallelism.
HoleSearch find_hole(const TripleSystem& s, int k, int a,
                     const SearchBudget& budget = {});

/// Best hole found by randomized local search (no optimality claim).
HoleCertificate heuristic_hole(const TripleSystem& s, int k,
                               std::uint64_t seed = 1,
                               int iterations_per_size = 0);

/// Minimum over r-colorings of the largest monochromatic component, by
/// depth-first coloring of triples with color-symmetry breaking and pruning
/// on the incumbent. `hints` seed the incumbent. Exact mode is intended for
/// n <= 13; on larger inputs it degrades to the best coloring found.
ParamResult mc_exact(const TripleSystem& s, int r,
                     const SearchBudget& budget = {},
                     std::span<const EdgeColoring> hints = {});

struct ColoringSearch {
  SearchStatus status = SearchStatus::kInfeasible;
  std::optional<EdgeColoring> coloring;
  BudgetSpent spent;
};

/// First r-coloring (in search order) whose largest monochromatic component
/// is strictly below `bound`, or kInfeasible if none exists.
ColoringSearch find_coloring_below(const TripleSystem& s, int r, int bound,
                                   const SearchBudget& budget = {});

/// The largest monochromatic component of c; an upper bound on mc_r.
int mc_upper_from_coloring(const EdgeColoring& c);

}  // namespace sts

#endif  // STS_SEARCH_HPP
