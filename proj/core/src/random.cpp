#include "sts/random.hpp"

#include <algorithm>
#include <string>

#include "sts/error.hpp"
#include "sts/rng.hpp"

namespace sts {

bool OrderedPartialSystem::is_linear() const {
  std::vector<char> used(pair_count(n), 0);
  for (const Triple& t : triples) {
    const std::size_t ranks[3] = {pair_rank(n, t.a, t.b), pair_rank(n, t.a, t.c),
                                  pair_rank(n, t.b, t.c)};
    for (std::size_t r : ranks) {
      if (used[r]) return false;
      used[r] = 1;
    }
  }
  return true;
}

TripleSystem OrderedPartialSystem::to_system() const {
  return build_system(n, triples);
}

OrderedPartialSystem OrderedPartialSystem::prefix(std::size_t count) const {
  OrderedPartialSystem out{n, {}};
  out.triples.assign(triples.begin(),
                     triples.begin() + static_cast<std::ptrdiff_t>(
                                           std::min(count, triples.size())));
  return out;
}

namespace {

// All triangles of K_n, ranked in colex order, with the alive ones kept in a
// dense array (swap-remove) and each triangle's position indexed by rank.
class TriangleTable {
 public:
  explicit TriangleTable(int n) : n_(n), edge_(static_cast<std::size_t>(n) * n, 1) {
    for (int c = 0; c < n; ++c) {
      for (int b = 0; b < c; ++b) {
        for (int a = 0; a < b; ++a) all_.push_back({a, b, c});
      }
    }
    alive_.resize(all_.size());
    pos_.resize(all_.size());
    for (std::size_t i = 0; i < all_.size(); ++i) {
      alive_[i] = static_cast<int>(i);
      pos_[i] = static_cast<int>(i);
    }
  }

  std::size_t alive() const { return alive_.size(); }
  const Triple& pick(std::size_t i) const { return all_[alive_[i]]; }

  void remove_edges_of(const Triple& t) {
    remove_edge(t.a, t.b);
    remove_edge(t.a, t.c);
    remove_edge(t.b, t.c);
  }

 private:
  static int rank(int a, int b, int c) {
    int x[3] = {a, b, c};
    std::sort(x, x + 3);
    return x[2] * (x[2] - 1) * (x[2] - 2) / 6 + x[1] * (x[1] - 1) / 2 + x[0];
  }

  void kill(int a, int b, int c) {
    const int r = rank(a, b, c);
    const int p = pos_[r];
    if (p < 0) return;
    const int last = alive_.back();
    alive_[p] = last;
    pos_[last] = p;
    alive_.pop_back();
    pos_[r] = -1;
  }

  void remove_edge(int u, int v) {
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (edge_[u * n_ + w] && edge_[v * n_ + w]) kill(u, v, w);
    }
    edge_[u * n_ + v] = edge_[v * n_ + u] = 0;
  }

  int n_;
  std::vector<char> edge_;
  std::vector<Triple> all_;
  std::vector<int> alive_;
  std::vector<int> pos_;
};

}  // namespace

ProcessOutcome triangle_removal(int n, int m, std::uint64_t seed) {
  if (n < 0) throw StsError(ErrorCode::kBadM, "n must be non-negative");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 6;
  if (m < 0 || m > max_m) {
    throw StsError(ErrorCode::kBadM, "m must be in [0, floor(C(n,2)/3)] = [0, " +
                                         std::to_string(max_m) + "]");
  }
  ProcessOutcome out;
  out.system.n = n;
  if (m == 0) return out;
  TriangleTable table(n);
  Rng rng(seed);
  for (int step = 0; step < m; ++step) {
    if (table.alive() == 0) {
      out.stuck = true;
      return out;
    }
    const Triple t = table.pick(rng.uniform(table.alive()));
    out.system.triples.push_back(t);
    table.remove_edges_of(t);
  }
  return out;
}

TripleSystem binomial_3graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw StsError(ErrorCode::kBadProbability, "p must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Triple> triples;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (rng.uniform01() < p) triples.push_back({a, b, c});
      }
    }
  }
  return build_system(n, triples);
}

OrderedPartialSystem linearize(const TripleSystem& g) {
  OrderedPartialSystem out{g.n(), {}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Triple& t = g.triple(i);
    if (g.pair_degree(t.a, t.b) == 1 && g.pair_degree(t.a, t.c) == 1 &&
        g.pair_degree(t.b, t.c) == 1) {
      out.triples.push_back(t);
    }
  }
  return out;
}

namespace {

// Stinson's hill-climbing, started from a linear partial system. Each step
// takes a point x with an uncovered pair, two uncovered partners y and z, and
// adds {x,y,z}, first evicting the triple that already covers {y,z}. Returns
// false if `max_steps` pass without completing.
bool hill_climb(OrderedPartialSystem& sys, Rng& rng, long long max_steps) {
  const int n = sys.n;
  const std::size_t target = static_cast<std::size_t>(n) * (n - 1) / 6;
  std::vector<int> third(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  auto cover = [&](const Triple& t, int value_ab, int value_ac, int value_bc) {
    third[t.a * n + t.b] = third[t.b * n + t.a] = value_ab;
    third[t.a * n + t.c] = third[t.c * n + t.a] = value_ac;
    third[t.b * n + t.c] = third[t.c * n + t.b] = value_bc;
  };
  for (const Triple& t : sys.triples) {
    cover(t, t.c, t.b, t.a);
    ++degree[t.a];
    ++degree[t.b];
    ++degree[t.c];
  }
  const int full_degree = (n - 1) / 2;
  std::vector<int> live;
  std::vector<int> partners;
  for (long long step = 0; step < max_steps; ++step) {
    if (sys.triples.size() == target) return true;
    live.clear();
    for (int v = 0; v < n; ++v) {
      if (degree[v] < full_degree) live.push_back(v);
    }
    const int x = live[rng.uniform(live.size())];
    partners.clear();
    for (int v = 0; v < n; ++v) {
      if (v != x && third[x * n + v] < 0) partners.push_back(v);
    }
    const std::size_t i = rng.uniform(partners.size());
    std::size_t j = rng.uniform(partners.size() - 1);
    if (j >= i) ++j;
    const int y = partners[i];
    const int z = partners[j];
    const int w = third[y * n + z];
    if (w >= 0) {
      const Triple old = Triple::sorted(w, y, z);
      sys.triples.erase(std::find(sys.triples.begin(), sys.triples.end(), old));
      cover(old, -1, -1, -1);
      --degree[w];
      --degree[y];
      --degree[z];
    }
    const Triple t = Triple::sorted(x, y, z);
    sys.triples.push_back(t);
    cover(t, t.c, t.b, t.a);
    ++degree[x];
    ++degree[y];
    ++degree[z];
  }
  return sys.triples.size() == target;
}

}  // namespace

SteinerSystem random_sts(int n, std::uint64_t seed, int max_restarts) {
  if (!admissible_order(n) || n < 3) {
    throw StsError(ErrorCode::kBadOrder,
                   "n = " + std::to_string(n) + " is not 1 or 3 mod 6");
  }
  const int m = n * (n - 1) / 6;
  const long long steps = 1000LL * n * n;
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    const std::uint64_t attempt_seed =
        derive_seed(seed, 0x5354, static_cast<std::uint64_t>(attempt));
    ProcessOutcome run = triangle_removal(n, m, attempt_seed);
    if (run.stuck) {
      Rng rng(derive_seed(attempt_seed, 0x4843));
      if (!hill_climb(run.system, rng, steps)) continue;
    }
    return validate_steiner(run.system.to_system(), Construction::kRandom);
  }
  throw StsError(ErrorCode::kRestartsExhausted,
                 "no complete system after " + std::to_string(max_restarts) +
                     " restarts");
}

}  // namespace sts
