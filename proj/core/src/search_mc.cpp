#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>

#include "sts/detail/budget.hpp"
#include "sts/detail/parallel.hpp"
#include "sts/error.hpp"
#include "sts/search.hpp"

namespace sts {
namespace {

// Orders triples so that each one shares as many vertices as possible with
// the triples placed before it. Only used to break ties in the dynamic
// choice below, so it affects speed, never the value.
std::vector<int> overlap_order(const TripleSystem& s) {
  const int m = static_cast<int>(s.size());
  std::vector<int> order;
  std::vector<char> placed(static_cast<std::size_t>(m), 0);
  std::vector<int> covered(static_cast<std::size_t>(s.n()), 0);
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    int pick_score = -1;
    int pick_degree = -1;
    for (int t = 0; t < m; ++t) {
      if (placed[t]) continue;
      int score = 0;
      int degree = 0;
      for (int v : s.triple(t).vertices()) {
        score += covered[v] > 0 ? 1 : 0;
        degree += s.degree(v);
      }
      if (score > pick_score || (score == pick_score && degree > pick_degree)) {
        pick = t;
        pick_score = score;
        pick_degree = degree;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
    for (int v : s.triple(pick).vertices()) ++covered[v];
  }
  return order;
}

struct Decision {
  int triple;
  int color;
};

// Shared state of one mc search: the incumbent bound (strict: we look for
// colorings whose largest component is below it) and the best coloring.
struct Incumbent {
  std::atomic<int> bound;
  std::mutex mutex;
  std::vector<int> colors;
  bool have = false;

  explicit Incumbent(int b) : bound(b) {}

  void offer(int largest, const std::vector<int>& coloring) {
    std::lock_guard<std::mutex> lock(mutex);
    if (largest < bound.load()) {
      bound.store(largest);
      colors = coloring;
      have = true;
    }
  }
};

// Depth-first coloring of triples. Each color keeps a component label per
// vertex; coloring a triple merges its three labels in that color. A triple
// may only take a color that keeps the merged component below the bound, and
// only the lowest unused color is ever opened. The next triple is the one
// with the fewest admissible colors.
class McSolver {
 public:
  McSolver(const TripleSystem& s, int r, const std::vector<int>& rank,
           detail::BudgetMeter& meter, Incumbent& incumbent, bool first_only)
      : s_(s), n_(s.n()), m_(static_cast<int>(s.size())), r_(r), rank_(rank),
        meter_(meter), inc_(incumbent), first_only_(first_only),
        colors_(static_cast<std::size_t>(m_), -1) {
    levels_.resize(static_cast<std::size_t>(m_) + 1);
    Level& root = levels_[0];
    root.label.resize(static_cast<std::size_t>(r_) * n_);
    root.size.assign(static_cast<std::size_t>(r_) * n_, 1);
    for (int c = 0; c < r_; ++c) {
      for (int v = 0; v < n_; ++v) root.label[c * n_ + v] = v;
    }
  }

  bool apply(const Decision& d) {
    if (d.color > used_ || d.color >= r_) return false;
    if (merged_size(d.triple, d.color) >= inc_.bound.load()) return false;
    push(d);
    return true;
  }

  // Returns true when a first-only search found a coloring.
  bool solve(int collect_depth = -1, std::vector<std::vector<Decision>>* frontier = nullptr) {
    if (!meter_.tick()) return false;
    const int bound = inc_.bound.load(std::memory_order_relaxed);
    if (depth_ == m_) {
      inc_.offer(largest_, colors_);
      return first_only_;
    }
    if (depth_ == collect_depth) {
      frontier->push_back(path_);
      return false;
    }

    // Most constrained unassigned triple.
    int pick = -1;
    int pick_options = r_ + 1;
    for (int t = 0; t < m_; ++t) {
      if (colors_[t] >= 0) continue;
      int options = 0;
      for (int c = 0; c < used_; ++c) {
        if (merged_size(t, c) < bound) ++options;
      }
      if (used_ < r_ && 3 < bound) ++options;
      if (options == 0) return false;
      if (options < pick_options ||
          (options == pick_options && rank_[t] < rank_[pick])) {
        pick = t;
        pick_options = options;
      }
    }

    // Colors in order of the component they would create, smallest first.
    int choice[64];
    int merged[64];
    int count = 0;
    for (int c = 0; c < used_ && count < 64; ++c) {
      const int size = merged_size(pick, c);
      if (size < bound) {
        choice[count] = c;
        merged[count++] = size;
      }
    }
    if (used_ < r_ && 3 < bound && count < 64) {
      choice[count] = used_;
      merged[count++] = 3;
    }
    for (int i = 1; i < count; ++i) {
      for (int j = i; j > 0 && merged[j] < merged[j - 1]; --j) {
        std::swap(merged[j], merged[j - 1]);
        std::swap(choice[j], choice[j - 1]);
      }
    }

    for (int i = 0; i < count; ++i) {
      if (merged_size(pick, choice[i]) >=
          inc_.bound.load(std::memory_order_relaxed)) {
        continue;
      }
      push({pick, choice[i]});
      const bool done = solve(collect_depth, frontier);
      pop();
      if (done) return true;
      if (meter_.exhausted()) return false;
    }
    return false;
  }

 private:
  struct Level {
    std::vector<int> label;
    std::vector<int> size;
    int largest = 0;
    int used = 0;
  };

  int merged_size(int t, int c) const {
    const Level& lv = levels_[depth_];
    const Triple& tr = s_.triple(t);
    const int* label = lv.label.data() + c * n_;
    const int* size = lv.size.data() + c * n_;
    const int la = label[tr.a];
    const int lb = label[tr.b];
    const int lc = label[tr.c];
    int total = size[la];
    if (lb != la) total += size[lb];
    if (lc != la && lc != lb) total += size[lc];
    return total;
  }

  void push(const Decision& d) {
    Level& cur = levels_[depth_];
    Level& next = levels_[depth_ + 1];
    next.label = cur.label;
    next.size = cur.size;
    const Triple& tr = s_.triple(d.triple);
    int* label = next.label.data() + d.color * n_;
    int* size = next.size.data() + d.color * n_;
    const int target = label[tr.a];
    const int lb = label[tr.b];
    const int lc = label[tr.c];
    int total = size[target];
    if (lb != target) total += size[lb];
    if (lc != target && lc != lb) total += size[lc];
    if (lb != target || lc != target) {
      for (int v = 0; v < n_; ++v) {
        if (label[v] == lb || label[v] == lc) label[v] = target;
      }
    }
    size[target] = total;
    cur.largest = largest_;
    cur.used = used_;
    largest_ = std::max(largest_, total);
    used_ = std::max(used_, d.color + 1);
    colors_[d.triple] = d.color;
    path_.push_back(d);
    ++depth_;
  }

  void pop() {
    --depth_;
    const Decision d = path_.back();
    path_.pop_back();
    colors_[d.triple] = -1;
    largest_ = levels_[depth_].largest;
    used_ = levels_[depth_].used;
  }

  const TripleSystem& s_;
  int n_;
  int m_;
  int r_;
  const std::vector<int>& rank_;
  detail::BudgetMeter& meter_;
  Incumbent& inc_;
  bool first_only_;
  std::vector<int> colors_;
  std::vector<Level> levels_;
  std::vector<Decision> path_;
  int depth_ = 0;
  int largest_ = 0;
  int used_ = 0;
};

std::vector<int> rank_of(const TripleSystem& s) {
  const std::vector<int> order = overlap_order(s);
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  return rank;
}

// Runs the search with the incumbent's current bound. Returns false when the
// budget ran out.
bool run_mc(const TripleSystem& s, int r, const SearchBudget& budget,
            detail::BudgetMeter& meter, Incumbent& inc, bool first_only) {
  const std::vector<int> rank = rank_of(s);
  if (budget.parallelism <= 1 || s.size() < 4) {
    McSolver solver(s, r, rank, meter, inc, first_only);
    solver.solve();
    return !meter.exhausted();
  }

  std::vector<std::vector<Decision>> frontier;
  for (int depth = 1; depth <= static_cast<int>(s.size()); ++depth) {
    frontier.clear();
    McSolver collector(s, r, rank, meter, inc, first_only);
    if (collector.solve(depth, &frontier)) return true;
    if (meter.exhausted()) return false;
    if (frontier.empty() ||
        frontier.size() >= 8u * static_cast<unsigned>(budget.parallelism)) {
      break;
    }
  }
  std::atomic<bool> stop{false};
  detail::for_each_task(frontier.size(), budget.parallelism, [&](std::size_t i) {
    McSolver solver(s, r, rank, meter, inc, first_only);
    for (const Decision& d : frontier[i]) {
      if (!solver.apply(d)) return !meter.exhausted();
    }
    if (solver.solve() && first_only) stop.store(true);
    return !stop.load() && !meter.exhausted();
  });
  return !meter.exhausted();
}

}  // namespace

int mc_upper_from_coloring(const EdgeColoring& c) {
  return largest_mono_component(c).size;
}

ColoringSearch find_coloring_below(const TripleSystem& s, int r, int bound,
                                   const SearchBudget& budget) {
  if (r < 1) throw StsError(ErrorCode::kBadColorCount, "r must be >= 1");
  detail::BudgetMeter meter(budget.max_nodes, budget.max_seconds);
  ColoringSearch out;
  if (s.size() == 0) {
    if ((s.n() > 0 ? 1 : 0) < bound) {
      out.status = SearchStatus::kFound;
      out.coloring = EdgeColoring(s, r, {});
    }
    return out;
  }
  Incumbent inc(bound);
  SearchBudget single = budget;
  single.parallelism = 1;
  const bool complete = run_mc(s, r, single, meter, inc, true);
  if (inc.have) {
    out.status = SearchStatus::kFound;
    out.coloring = EdgeColoring(s, r, inc.colors);
  } else if (!complete) {
    out.status = SearchStatus::kBudgetExhausted;
  }
  out.spent = {meter.nodes(), meter.seconds()};
  return out;
}

ParamResult mc_exact(const TripleSystem& s, int r, const SearchBudget& budget,
                     std::span<const EdgeColoring> hints) {
  if (r < 1) throw StsError(ErrorCode::kBadColorCount, "r must be >= 1");
  detail::BudgetMeter meter(budget.max_nodes, budget.max_seconds);
  ParamResult result;
  if (s.size() == 0) {
    result.value = s.n() > 0 ? 1 : 0;
    result.exact = true;
    result.certificate = EdgeColoring(s, r, {});
    return result;
  }

  Incumbent inc(s.n() + 1);
  for (const EdgeColoring& hint : hints) {
    if (&hint.system() != &s && !(hint.system() == s)) continue;
    if (hint.r() > r) continue;
    inc.offer(mc_upper_from_coloring(hint), hint.colors());
  }

  const bool complete = run_mc(s, r, budget, meter, inc, false);
  if (!inc.have) {
    // Budget ran out before the first complete coloring.
    EdgeColoring single_color(s, r, std::vector<int>(s.size(), 0));
    inc.offer(mc_upper_from_coloring(single_color), single_color.colors());
  }
  result.value = inc.bound.load();
  result.exact = complete;
  result.certificate = EdgeColoring(s, r, inc.colors);

  if (complete) {
    // Report the first optimal coloring in single-worker order so the
    // witness does not depend on scheduling or hints.
    ColoringSearch canonical = find_coloring_below(s, r, result.value + 1, budget);
    if (canonical.coloring) result.certificate = *canonical.coloring;
  }
  result.spent = {meter.nodes(), meter.seconds()};
  return result;
}

}  // namespace sts
