#ifndef STS_RANDOM_HPP
#define STS_RANDOM_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sts/search.hpp"
#include "sts/system.hpp"

namespace sts {

/// A linear system whose triples carry an insertion order. Every prefix is
/// again linear.
struct OrderedPartialSystem {
  int n = 0;
  std::vector<Triple> triples;

  bool is_linear() const;
  TripleSystem to_system() const;
  /// The first `count` triples.
  OrderedPartialSystem prefix(std::size_t count) const;
};

/// Result of a process that may halt early.
struct ProcessOutcome {
  bool stuck = false;
  OrderedPartialSystem system;
};

/// Starts from K_n and m times deletes a triangle chosen uniformly among
/// those still present, recording it as the next triple. Stuck when no
/// triangle is left before step m. kBadM when m > floor(C(n,2)/3).
ProcessOutcome triangle_removal(int n, int m, std::uint64_t seed);

/// Every triple of [n] independently with probability p (kBadProbability
/// unless 0 <= p <= 1).
TripleSystem binomial_3graph(int n, double p, std::uint64_t seed);

/// Drops every triple that shares two vertices with another triple. Kept
/// triples stay in their original order.
OrderedPartialSystem linearize(const TripleSystem& g);

/// Runs the triangle removal process towards n(n-1)/6 triples. When it gets
/// stuck, the partial system is completed by Stinson's hill-climbing; an
/// attempt whose hill-climb stalls is restarted with a fresh derived seed.
/// The result is a valid Steiner system but its distribution is not uniform
/// over all systems. kBadOrder for inadmissible n, kRestartsExhausted after
/// max_restarts attempts.
SteinerSystem random_sts(int n, std::uint64_t seed, int max_restarts = 1000);

struct ExperimentRow {
  std::uint64_t seed = 0;
  int n = 0;
  std::string model;  // "triangle-removal" or "random-sts"
  int m = 0;
  int sample = 0;
  int alpha_star3 = 0;
  bool exact = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct ExperimentConfig {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 1;
  SearchBudget budget;
  int jobs = 1;
  int max_restarts = 1000;
};

struct ModelSummary {
  std::string model;
  int rows = 0;
  int exact_rows = 0;
  int max_alpha = 0;
  int max_exact_alpha = 0;
  double mean_alpha = 0.0;
};

struct ExperimentSummary {
  int n = 0;
  double n_pow_09 = 0.0;
  int steiner_upper = 0;  // floor(n/3) - 1
  std::vector<ModelSummary> models;
};

/// For each sample, a partial system from triangle_removal at
/// m = round(C(n,2)/6) and a full random_sts, each with its alpha*_3.
/// Rows come in sample order: partial, then full.
std::vector<ExperimentRow> experiment_discrepancy(const ExperimentConfig& cfg);

ExperimentSummary summarize(const std::vector<ExperimentRow>& rows, int n);

/// CSV with header seed,n,model,m_or_p,sample,alpha_star3,exact,nodes,seconds.
/// The seconds column is left empty unless with_timing, so reruns compare
/// byte for byte.
void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRow>& rows,
                          bool with_timing = false);

/// Rows of the trend table: n, model, max, mean, n^0.9, floor(n/3)-1.
void write_summary_table(std::ostream& out, const ExperimentSummary& summary);

}  // namespace sts

#endif  // STS_RANDOM_HPP
