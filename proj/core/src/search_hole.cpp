#include <algorithm>
#include <numeric>
#include <string>

#include "sts/detail/budget.hpp"
#include "sts/detail/mask.hpp"
#include "sts/detail/parallel.hpp"
#include "sts/error.hpp"
#include "sts/rng.hpp"
#include "sts/search.hpp"

namespace sts {
namespace {

constexpr int kNone = -1;
constexpr int kUnassigned = -2;

// Backtracking search for a k-partite hole of size a (k in {2, 3}).
//
// Vertices are decided in index order; each goes to one of the parts or to
// none. Parts are opened in order, so part j's smallest vertex precedes part
// j+1's. Each unassigned vertex keeps a domain of parts it may still join;
// assigning a vertex strips from its triple-mates every part that would let
// that triple meet all k parts. A branch dies when some part can no longer
// reach size a.
class HoleSolver {
 public:
  HoleSolver(const TripleSystem& s, int k, int a, detail::BudgetMeter& meter)
      : s_(s), n_(s.n()), k_(k), a_(a), meter_(meter),
        assign_(static_cast<std::size_t>(n_), kUnassigned),
        domain_(static_cast<std::size_t>(n_), (1u << k) - 1),
        size_(static_cast<std::size_t>(k), 0),
        avail_(static_cast<std::size_t>(k), n_) {}

  // Replays a decision prefix. Returns false if it is not consistent.
  bool replay(const std::vector<int>& prefix) {
    for (int choice : prefix) {
      const int v = depth_;
      if (choice == kNone) {
        decide_none(v);
        if (!feasible()) return false;
      } else if (!allowed(v, choice) || !decide_part(v, choice)) {
        return false;
      }
    }
    return true;
  }

  // Depth-first search from the current depth. With collect_depth >= 0,
  // stops at that depth and records decision prefixes instead of solving.
  bool solve(int collect_depth = -1,
             std::vector<std::vector<int>>* frontier = nullptr) {
    if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) {
      return false;
    }
    if (!meter_.tick()) return false;
    if (complete()) return true;
    if (depth_ == n_) return false;
    if (depth_ == collect_depth) {
      frontier->push_back(choices_);
      return false;
    }
    const int v = depth_;
    const int max_part = std::min(opened_, k_ - 1);
    for (int j = 0; j <= max_part; ++j) {
      if (!allowed(v, j)) continue;
      const std::size_t mark = trail_.size();
      if (decide_part(v, j) && solve(collect_depth, frontier)) return true;
      undo(v, mark);
      if (meter_.exhausted()) return false;
    }
    const std::size_t mark = trail_.size();
    decide_none(v);
    if (feasible() && solve(collect_depth, frontier)) return true;
    undo(v, mark);
    return false;
  }

  void set_stop_flag(const std::atomic<bool>* stop) { stop_ = stop; }

  HoleCertificate certificate() const {
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(k_));
    for (int v = 0; v < n_; ++v) {
      if (assign_[v] >= 0) parts[assign_[v]].push_back(v);
    }
    return HoleCertificate::from_parts(std::move(parts));
  }

 private:
  struct TrailEntry {
    int vertex;
    unsigned old_domain;
  };

  bool complete() const {
    for (int j = 0; j < k_; ++j) {
      if (size_[j] < a_) return false;
    }
    return true;
  }

  bool allowed(int v, int j) const {
    return (domain_[v] >> j & 1u) && size_[j] < a_ && j <= opened_;
  }

  bool feasible() const {
    int missing = 0;
    for (int j = 0; j < k_; ++j) {
      if (size_[j] + avail_[j] < a_) return false;
      missing += a_ - size_[j];
    }
    return missing <= n_ - depth_;
  }

  void strip(int w, unsigned bits) {
    const unsigned removed = domain_[w] & bits;
    if (!removed) return;
    trail_.push_back({w, domain_[w]});
    domain_[w] &= ~bits;
    for (int j = 0; j < k_; ++j) {
      if (removed >> j & 1u) --avail_[j];
    }
  }

  void leave_pool(int v) {
    for (int j = 0; j < k_; ++j) {
      if (domain_[v] >> j & 1u) --avail_[j];
    }
  }

  void decide_none(int v) {
    leave_pool(v);
    assign_[v] = kNone;
    choices_.push_back(kNone);
    ++depth_;
  }

  bool decide_part(int v, int j) {
    leave_pool(v);
    assign_[v] = j;
    ++size_[j];
    if (j == opened_) ++opened_;
    choices_.push_back(j);
    ++depth_;
    for (auto ti : s_.triples_at(v)) {
      const Triple& t = s_.triple(ti);
      int others[2];
      int c = 0;
      for (int w : t.vertices()) {
        if (w != v) others[c++] = w;
      }
      if (k_ == 2) {
        for (int w : others) {
          if (assign_[w] == kUnassigned) strip(w, 1u << (1 - j));
        }
      } else {
        for (int side = 0; side < 2; ++side) {
          const int x = others[side];
          const int y = others[1 - side];
          if (assign_[x] >= 0 && assign_[x] != j && assign_[y] == kUnassigned) {
            strip(y, 1u << (3 - j - assign_[x]));
          }
        }
      }
    }
    return feasible();
  }

  void undo(int v, std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry e = trail_.back();
      trail_.pop_back();
      const unsigned restored = e.old_domain & ~domain_[e.vertex];
      for (int j = 0; j < k_; ++j) {
        if (restored >> j & 1u) ++avail_[j];
      }
      domain_[e.vertex] = e.old_domain;
    }
    const int j = assign_[v];
    if (j >= 0) {
      --size_[j];
      if (size_[j] == 0 && j == opened_ - 1) --opened_;
    }
    assign_[v] = kUnassigned;
    for (int p = 0; p < k_; ++p) {
      if (domain_[v] >> p & 1u) ++avail_[p];
    }
    choices_.pop_back();
    --depth_;
  }

  const TripleSystem& s_;
  int n_;
  int k_;
  int a_;
  detail::BudgetMeter& meter_;
  std::vector<int> assign_;
  std::vector<unsigned> domain_;
  std::vector<int> size_;
  std::vector<int> avail_;
  std::vector<TrailEntry> trail_;
  std::vector<int> choices_;
  int depth_ = 0;
  int opened_ = 0;
  const std::atomic<bool>* stop_ = nullptr;
};

HoleCertificate trivial_hole(int n, int k, int a) {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
  int v = 0;
  for (auto& part : parts) {
    for (int i = 0; i < a && v < n; ++i) part.push_back(v++);
  }
  return HoleCertificate::from_parts(std::move(parts));
}

HoleSearch run_hole_search(const TripleSystem& s, int k, int a,
                           const SearchBudget& budget,
                           detail::BudgetMeter& meter) {
  HoleSearch out;
  if (a == 0 || k > 3) {
    if (static_cast<long>(k) * a <= s.n()) {
      out.status = SearchStatus::kFound;
      out.hole = trivial_hole(s.n(), k, a);
    }
    return out;
  }
  if (static_cast<long>(k) * a > s.n()) return out;

  if (budget.parallelism <= 1) {
    HoleSolver solver(s, k, a, meter);
    if (solver.solve()) {
      out.status = SearchStatus::kFound;
      out.hole = solver.certificate();
    } else if (meter.exhausted()) {
      out.status = SearchStatus::kBudgetExhausted;
    }
    return out;
  }

  // Split the tree at a shallow depth; each worker replays one prefix.
  std::vector<std::vector<int>> frontier;
  std::atomic<bool> found{false};
  for (int depth = 1; depth <= s.n() && !found.load(); ++depth) {
    frontier.clear();
    HoleSolver collector(s, k, a, meter);
    if (collector.solve(depth, &frontier)) found.store(true);
    if (frontier.empty()) break;
    if (meter.exhausted()) {
      out.status = SearchStatus::kBudgetExhausted;
      return out;
    }
    if (frontier.size() >= 8u * static_cast<unsigned>(budget.parallelism)) {
      break;
    }
  }

  if (!found.load()) {
    detail::for_each_task(
        frontier.size(), budget.parallelism, [&](std::size_t i) {
          HoleSolver solver(s, k, a, meter);
          solver.set_stop_flag(&found);
          if (solver.replay(frontier[i]) && solver.solve()) found.store(true);
          return !found.load() && !meter.exhausted();
        });
  }
  if (found.load()) {
    // Canonical witness: the first one in single-worker order. A hole of
    // this size is known to exist, so the replay is not budgeted.
    detail::BudgetMeter replay_meter(UINT64_MAX, 1e300);
    HoleSolver canonical(s, k, a, replay_meter);
    canonical.solve();
    out.status = SearchStatus::kFound;
    out.hole = canonical.certificate();
  } else if (meter.exhausted()) {
    out.status = SearchStatus::kBudgetExhausted;
  }
  return out;
}

// True when t meets all k parts under `part` (-1 = outside).
bool triple_conflicts(const Triple& t, const std::vector<int>& part, int k) {
  unsigned touched = 0;
  for (int v : t.vertices()) {
    if (part[v] >= 0) touched |= 1u << part[v];
  }
  return touched == (1u << k) - 1;
}

int conflicts_at(const TripleSystem& s, const std::vector<int>& part, int k,
                 int v) {
  int c = 0;
  for (auto ti : s.triples_at(v)) {
    if (triple_conflicts(s.triple(ti), part, k)) ++c;
  }
  return c;
}

}  // namespace

bool is_steiner(const TripleSystem& s) {
  if (!admissible_order(s.n())) return false;
  for (int u = 0; u < s.n(); ++u) {
    for (int v = u + 1; v < s.n(); ++v) {
      if (s.pair_degree(u, v) != 1) return false;
    }
  }
  return true;
}

int alpha_star_upper_bound(const TripleSystem& s, int k) {
  if (k == 3 && is_steiner(s)) return std::max(0, s.n() / 3 - 1);
  return s.n() / k;
}

HoleSearch find_hole(const TripleSystem& s, int k, int a,
                     const SearchBudget& budget) {
  if (k < 2) throw StsError(ErrorCode::kBadK, "k must be at least 2");
  if (s.n() > detail::Mask::kCapacity) {
    throw StsError(ErrorCode::kTooLarge,
                   "exact hole search supports n <= 128");
  }
  detail::BudgetMeter meter(budget.max_nodes, budget.max_seconds);
  HoleSearch out = run_hole_search(s, k, a, budget, meter);
  out.spent = {meter.nodes(), meter.seconds()};
  return out;
}

HoleCertificate heuristic_hole(const TripleSystem& s, int k,
                               std::uint64_t seed, int iterations_per_size) {
  if (k < 2) throw StsError(ErrorCode::kBadK, "k must be at least 2");
  const int n = s.n();
  if (k > 3) return trivial_hole(n, k, n / k);
  if (iterations_per_size <= 0) iterations_per_size = 200 * std::max(n, 1);

  Rng rng(derive_seed(seed, 0x401e));
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  HoleCertificate best = trivial_hole(n, k, 0);

  for (int a = 1; static_cast<long>(k) * a <= n; ++a) {
    // Grow every part by one vertex, picking the least conflicting outsider.
    for (int j = 0; j < k; ++j) {
      int pick = -1;
      int pick_cost = 0;
      for (int w = 0; w < n; ++w) {
        if (part[w] >= 0) continue;
        part[w] = j;
        const int cost = conflicts_at(s, part, k, w);
        part[w] = -1;
        if (pick < 0 || cost < pick_cost) {
          pick = w;
          pick_cost = cost;
        }
      }
      part[pick] = j;
    }

    std::vector<std::size_t> bad;
    for (int iter = 0; iter < iterations_per_size; ++iter) {
      bad.clear();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (triple_conflicts(s.triple(i), part, k)) bad.push_back(i);
      }
      if (bad.empty()) break;
      const Triple& t = s.triple(bad[rng.uniform(bad.size())]);
      std::vector<int> members;
      for (int v : t.vertices()) {
        if (part[v] >= 0) members.push_back(v);
      }
      const int v = members[rng.uniform(members.size())];
      const int j = part[v];
      part[v] = -1;
      // Replace v by the outsider that creates the fewest conflicts; a small
      // share of random moves keeps the walk from cycling.
      std::vector<int> options;
      int best_cost = -1;
      const bool random_move = rng.uniform(10) == 0;
      for (int w = 0; w < n; ++w) {
        if (part[w] >= 0 || w == v) continue;
        if (random_move) {
          options.push_back(w);
          continue;
        }
        part[w] = j;
        const int cost = conflicts_at(s, part, k, w);
        part[w] = -1;
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          options.assign(1, w);
        } else if (cost == best_cost) {
          options.push_back(w);
        }
      }
      if (options.empty()) {
        part[v] = j;
        continue;
      }
      part[options[rng.uniform(options.size())]] = j;
    }

    bool ok = true;
    for (const Triple& t : s.triples()) {
      if (triple_conflicts(t, part, k)) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) {
      if (part[v] >= 0) parts[part[v]].push_back(v);
    }
    best = HoleCertificate::from_parts(std::move(parts));
  }
  return best;
}

ParamResult alpha_star(const TripleSystem& s, int k,
                       const SearchBudget& budget) {
  if (k < 2) throw StsError(ErrorCode::kBadK, "k must be at least 2");
  detail::BudgetMeter meter(budget.max_nodes, budget.max_seconds);

  HoleCertificate lower = heuristic_hole(s, k);
  ParamResult result;
  result.value = lower.a;
  result.certificate = lower;

  const int upper = alpha_star_upper_bound(s, k);
  if (s.n() > detail::Mask::kCapacity) {
    result.exact = lower.a >= upper;
    result.spent = {meter.nodes(), meter.seconds()};
    return result;
  }

  result.exact = true;
  for (int a = upper; a > lower.a; --a) {
    HoleSearch attempt = run_hole_search(s, k, a, budget, meter);
    if (attempt.status == SearchStatus::kFound) {
      result.value = a;
      result.certificate = *attempt.hole;
      break;
    }
    if (attempt.status == SearchStatus::kBudgetExhausted) {
      result.exact = false;
      break;
    }
  }
  result.spent = {meter.nodes(), meter.seconds()};
  return result;
}

}  // namespace sts
