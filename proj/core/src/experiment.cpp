#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "sts/detail/parallel.hpp"
#include "sts/error.hpp"
#include "sts/random.hpp"
#include "sts/rng.hpp"

namespace sts {
namespace {

constexpr std::uint64_t kPartialStream = 1;
constexpr std::uint64_t kFullStream = 2;

ExperimentRow measure(const TripleSystem& s, const ExperimentConfig& cfg,
                      const std::string& model, int m, int sample) {
  SearchBudget budget = cfg.budget;
  budget.parallelism = 1;
  const auto start = std::chrono::steady_clock::now();
  const ParamResult r = alpha_star(s, 3, budget);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  ExperimentRow row;
  row.seed = cfg.seed;
  row.n = cfg.n;
  row.model = model;
  row.m = m;
  row.sample = sample;
  row.alpha_star3 = r.value;
  row.exact = r.exact;
  row.nodes = r.spent.nodes;
  row.seconds = took.count();
  return row;
}

}  // namespace

std::vector<ExperimentRow> experiment_discrepancy(const ExperimentConfig& cfg) {
  if (!admissible_order(cfg.n) || cfg.n < 7) {
    throw StsError(ErrorCode::kBadOrder,
                   "n = " + std::to_string(cfg.n) + " is not 1 or 3 mod 6");
  }
  const int n = cfg.n;
  const int partial_m =
      static_cast<int>(std::lround(n * (n - 1) / 2.0 / 6.0));
  const int full_m = n * (n - 1) / 6;
  std::vector<ExperimentRow> rows(2 * static_cast<std::size_t>(cfg.samples));
  detail::for_each_task(static_cast<std::size_t>(cfg.samples), cfg.jobs,
                        [&](std::size_t i) {
    const int sample = static_cast<int>(i);
    const ProcessOutcome partial =
        triangle_removal(n, partial_m, derive_seed(cfg.seed, kPartialStream, i));
    rows[2 * i] = measure(partial.system.to_system(), cfg, "triangle-removal",
                          static_cast<int>(partial.system.triples.size()), sample);
    const SteinerSystem full =
        random_sts(n, derive_seed(cfg.seed, kFullStream, i), cfg.max_restarts);
    rows[2 * i + 1] = measure(full.system(), cfg, "random-sts", full_m, sample);
    return true;
  });
  return rows;
}

ExperimentSummary summarize(const std::vector<ExperimentRow>& rows, int n) {
  ExperimentSummary out;
  out.n = n;
  out.n_pow_09 = std::pow(static_cast<double>(n), 0.9);
  out.steiner_upper = n / 3 - 1;
  for (const char* model : {"triangle-removal", "random-sts"}) {
    ModelSummary m;
    m.model = model;
    long long total = 0;
    for (const ExperimentRow& row : rows) {
      if (row.model != model) continue;
      ++m.rows;
      total += row.alpha_star3;
      m.max_alpha = std::max(m.max_alpha, row.alpha_star3);
      if (row.exact) {
        ++m.exact_rows;
        m.max_exact_alpha = std::max(m.max_exact_alpha, row.alpha_star3);
      }
    }
    if (m.rows > 0) m.mean_alpha = static_cast<double>(total) / m.rows;
    out.models.push_back(m);
  }
  return out;
}

void write_experiment_csv(std::ostream& out,
                          const std::vector<ExperimentRow>& rows,
                          bool with_timing) {
  out << "seed,n,model,m_or_p,sample,alpha_star3,exact,nodes,seconds\n";
  for (const ExperimentRow& r : rows) {
    out << r.seed << ',' << r.n << ',' << r.model << ',' << r.m << ','
        << r.sample << ',' << r.alpha_star3 << ',' << (r.exact ? "true" : "false")
        << ',' << r.nodes << ',';
    if (with_timing) out << std::fixed << std::setprecision(6) << r.seconds;
    out << '\n';
  }
}

void write_summary_table(std::ostream& out, const ExperimentSummary& summary) {
  out << "n,model,rows,exact_rows,max_alpha_star3,mean_alpha_star3,n^0.9,"
         "floor(n/3)-1\n";
  for (const ModelSummary& m : summary.models) {
    out << summary.n << ',' << m.model << ',' << m.rows << ',' << m.exact_rows
        << ',' << m.max_alpha << ',' << std::fixed << std::setprecision(4)
        << m.mean_alpha << ',' << summary.n_pow_09 << ','
        << summary.steiner_upper << '\n';
    out.unsetf(std::ios::fixed);
  }
}

}  // namespace sts
