#include <algorithm>
#include <numeric>

#include "sts/detail/budget.hpp"
#include "sts/detail/mask.hpp"
#include "sts/search.hpp"

namespace sts {
namespace {

using detail::Mask;

class IndependenceSearch {
 public:
  IndependenceSearch(const TripleSystem& s, detail::BudgetMeter& meter)
      : s_(s), n_(s.n()), meter_(meter), third_(static_cast<std::size_t>(n_) * n_) {
    for (const Triple& t : s.triples()) {
      third_[t.a * n_ + t.b].set(t.c);
      third_[t.b * n_ + t.a].set(t.c);
      third_[t.a * n_ + t.c].set(t.b);
      third_[t.c * n_ + t.a].set(t.b);
      third_[t.b * n_ + t.c].set(t.a);
      third_[t.c * n_ + t.b].set(t.a);
    }
    for (const Triple& t : s.triples()) {
      Mask m;
      m.set(t.a);
      m.set(t.b);
      m.set(t.c);
      triple_masks_.push_back(m);
    }
  }

  void seed(const Mask& set) {
    best_ = set;
    best_size_ = set.count();
  }

  // Returns false when the budget ran out.
  bool run() {
    branch(Mask{}, Mask::first_n(n_));
    return !meter_.exhausted();
  }

  const Mask& best() const { return best_; }

 private:
  // Upper bound on how many more vertices of `cand` can join `chosen`:
  // greedily pack disjoint constraints (a pair of candidates completing a
  // triple with a chosen vertex, or a triple of candidates), each of which
  // forces at least one candidate out.
  int bound(const Mask& chosen, const Mask& cand) const {
    Mask used;
    int lost = 0;
    for (const Mask& t : triple_masks_) {
      if (!cand.intersects(t)) continue;
      Mask in_cand = t;
      in_cand &= cand;
      const int c = in_cand.count();
      if (c == 2 && chosen.intersects(t) && !used.intersects(in_cand)) {
        used |= in_cand;
        ++lost;
      }
    }
    for (const Mask& t : triple_masks_) {
      if (cand.contains_all(t) && !used.intersects(t)) {
        used |= t;
        ++lost;
      }
    }
    return cand.count() - lost;
  }

  void branch(const Mask& chosen, const Mask& cand) {
    if (!meter_.tick()) return;
    const int size = chosen.count();
    if (size > best_size_) {
      best_ = chosen;
      best_size_ = size;
    }
    if (!cand.any()) return;
    if (size + bound(chosen, cand) <= best_size_) return;

    const int v = cand.first();
    Mask next_cand = cand;
    next_cand.reset(v);

    Mask forbidden;
    chosen.for_each([&](int u) { forbidden |= third_[u * n_ + v]; });
    Mask with_v = chosen;
    with_v.set(v);
    branch(with_v, next_cand.without(forbidden));
    if (meter_.exhausted()) return;
    branch(chosen, next_cand);
  }

  const TripleSystem& s_;
  int n_;
  detail::BudgetMeter& meter_;
  std::vector<Mask> third_;
  std::vector<Mask> triple_masks_;
  Mask best_;
  int best_size_ = -1;
};

std::vector<int> greedy_independent_set(const TripleSystem& s) {
  const int n = s.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return s.degree(x) < s.degree(y);
  });
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> out;
  for (int v : order) {
    bool ok = true;
    for (auto ti : s.triples_at(v)) {
      const Triple& t = s.triple(ti);
      int inside = 0;
      for (int w : t.vertices()) inside += (w != v && in[w]) ? 1 : 0;
      if (inside == 2) {
        ok = false;
        break;
      }
    }
    if (ok) {
      in[v] = 1;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ParamResult independence_number(const TripleSystem& s,
                                const SearchBudget& budget) {
  detail::BudgetMeter meter(budget.max_nodes, budget.max_seconds);
  std::vector<int> greedy = greedy_independent_set(s);
  ParamResult result;
  if (s.n() > Mask::kCapacity) {
    result.value = static_cast<int>(greedy.size());
    result.exact = false;
    result.certificate = std::move(greedy);
    result.spent = {0, meter.seconds()};
    return result;
  }

  IndependenceSearch search(s, meter);
  Mask start;
  for (int v : greedy) start.set(v);
  search.seed(start);
  const bool complete = search.run();

  std::vector<int> best;
  search.best().for_each([&](int v) { best.push_back(v); });
  result.value = static_cast<int>(best.size());
  result.exact = complete;
  result.certificate = std::move(best);
  result.spent = {meter.nodes(), meter.seconds()};
  return result;
}

}  // namespace sts
