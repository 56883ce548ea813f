#include "sts/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sts/bounds.hpp"
#include "sts/colorings.hpp"
#include "sts/constructions.hpp"
#include "sts/error.hpp"
#include "sts/io.hpp"
#include "sts/random.hpp"
#include "sts/report.hpp"
#include "sts/search.hpp"

namespace sts::cli {
namespace {

// Thrown to leave a command with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

int default_jobs() {
  if (const char* env = std::getenv("STS_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs > 0) return jobs;
  }
  return 1;
}

struct BudgetFlags {
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  double max_seconds = SearchBudget{}.max_seconds;
  int jobs = default_jobs();

  void attach(CLI::App* app) {
    app->add_option("--max-nodes", max_nodes, "Node budget per search");
    app->add_option("--max-seconds", max_seconds, "Time budget per search");
    app->add_option("--jobs", jobs, "Worker threads (default: STS_JOBS or 1)")
        ->check(CLI::PositiveNumber);
  }

  SearchBudget budget() const { return {max_nodes, max_seconds, jobs}; }
};

// Output file, or the given stream when the path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Exit{kInputFailure, "cannot write " + path};
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// An input system. `steiner` is set when the triples form a Steiner system;
// for Bose and Skolem files it also carries the type labels.
struct Loaded {
  TripleSystem system;
  std::optional<SteinerSystem> steiner;

  const TripleSystem& view() const {
    return steiner ? steiner->system() : system;
  }
};

Loaded load(const std::string& path) {
  Loaded out;
  StsDocument doc;
  try {
    doc = read_sts_file(path);
  } catch (const StsError& e) {
    throw Exit{kInputFailure, e.what()};
  }
  out.system = doc.system;
  if (is_steiner(doc.system)) {
    try {
      out.steiner = attach_labels(doc.system, doc.construction);
    } catch (const StsError& e) {
      throw Exit{kInputFailure, e.what()};
    }
  }
  return out;
}

void progress(std::ostream& err, const std::string& line) {
  err << "sts: " << line << '\n';
}

// gen ----------------------------------------------------------------------

struct GenFlags {
  std::string construction;
  int n = 0;
  std::string out;
  std::string quasigroup = "standard";
  std::uint64_t qseed = 1;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  const auto c = parse_construction(f.construction);
  if (!c || *c == Construction::kUnknown || *c == Construction::kRandom) {
    throw Exit{kParameterFailure, "unknown construction '" + f.construction + "'"};
  }
  if (f.quasigroup != "standard" && f.quasigroup != "random") {
    throw Exit{kParameterFailure, "--quasigroup must be standard or random"};
  }
  if (f.quasigroup == "random" && *c != Construction::kBose) {
    throw Exit{kParameterFailure, "--quasigroup random applies to bose only"};
  }
  std::optional<SteinerSystem> s;
  try {
    switch (*c) {
      case Construction::kFano:
        if (f.n != 0 && f.n != 7) throw StsError(ErrorCode::kBadOrder, "fano has n = 7");
        s = fano();
        break;
      case Construction::kS9:
        if (f.n != 0 && f.n != 9) throw StsError(ErrorCode::kBadOrder, "s9 has n = 9");
        s = s9();
        break;
      case Construction::kBose: {
        std::optional<Quasigroup> q;
        if (f.quasigroup == "random") {
          if (f.n < 9 || f.n % 6 != 3) {
            throw StsError(ErrorCode::kBadOrder, "Bose construction needs n = 3 mod 6, n >= 9");
          }
          q = random_idempotent_quasigroup(f.n / 3, f.qseed);
        }
        s = bose(f.n, q);
        break;
      }
      default:
        s = skolem(f.n);
        break;
    }
  } catch (const StsError& e) {
    throw Exit{kConstructionFailure, e.what()};
  }
  Sink sink(f.out, out);
  write_sts(*sink, *s);
  return kOk;
}

// analyze ------------------------------------------------------------------

struct AnalyzeFlags {
  std::string in;
  std::string param = "all";
  std::string out;
  bool timing = false;
  BudgetFlags budget;
};

int cmd_analyze(const AnalyzeFlags& f, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(f.in);
  const TripleSystem& s = loaded.view();
  const bool all = f.param == "all";
  const SearchBudget budget = f.budget.budget();
  const auto start = std::chrono::steady_clock::now();

  AnalysisInput in;
  in.system = &s;
  in.steiner = loaded.steiner ? &*loaded.steiner : nullptr;
  in.timing = f.timing;

  if (all || f.param == "alpha") {
    progress(err, "independence number");
    in.alpha = independence_number(s, budget);
  }
  if (all || f.param == "alpha-star3") {
    progress(err, "3-partite hole number");
    in.alpha_star3 = alpha_star(s, 3, budget);
  }
  if (all || f.param == "mc3") {
    progress(err, "mc3");
    std::vector<EdgeColoring> hints;
    if (in.steiner && in.steiner->labeled()) {
      hints.push_back(in.steiner->construction() == Construction::kBose
                          ? bose_coloring(*in.steiner)
                          : skolem_coloring(*in.steiner));
    }
    if (in.alpha_star3) {
      const auto& h = std::get<HoleCertificate>(in.alpha_star3->certificate);
      if (h.a > 0) hints.push_back(hole_coloring(s, h));
    }
    in.mc3 = mc_exact(s, 3, budget, hints);
  }
  in.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const nlohmann::json report = build_report(in);
  Sink sink(f.out, out);
  *sink << report.dump(2) << '\n';
  return kOk;
}

// color --------------------------------------------------------------------

struct ColorFlags {
  std::string in;
  std::string scheme;
  std::string out;
  std::string hole_file;
  BudgetFlags budget;
};

void write_color_summary(std::ostream& os, const EdgeColoring& c) {
  const ComponentSet comps = mono_components(c);
  os << "color,triples,spanned,largest_component\n";
  for (int color = 0; color < c.r(); ++color) {
    std::size_t triples = std::count(c.colors().begin(), c.colors().end(), color);
    std::size_t largest = 0;
    for (const auto& comp : comps.components[color]) largest = std::max(largest, comp.size());
    os << color << ',' << triples << ',' << comps.spanned[color].size() << ','
       << largest << '\n';
  }
  os << "max_component," << largest_mono_component(c).size << '\n';
}

int cmd_color(const ColorFlags& f, std::ostream& out, std::ostream& err) {
  const Loaded loaded = load(f.in);
  const TripleSystem& s = loaded.view();
  std::optional<EdgeColoring> coloring;
  std::string note;
  try {
    if (f.scheme == "hole") {
      HoleCertificate h;
      if (!f.hole_file.empty()) {
        std::ifstream hf(f.hole_file);
        if (!hf) throw Exit{kInputFailure, "cannot read " + f.hole_file};
        try {
          h = read_hole(hf);
        } catch (const StsError& e) {
          throw Exit{kInputFailure, e.what()};
        }
      } else {
        progress(err, "searching for a largest 3-partite hole");
        const ParamResult r = alpha_star(s, 3, f.budget.budget());
        h = std::get<HoleCertificate>(r.certificate);
        note = "hole_size," + std::to_string(h.a) + (r.exact ? ",exact" : ",heuristic");
      }
      coloring = hole_coloring(s, h);
    } else if (f.scheme == "bose" || f.scheme == "skolem") {
      if (!loaded.steiner) {
        throw StsError(ErrorCode::kMissingLabels, "input is not a Steiner system");
      }
      coloring = f.scheme == "bose" ? bose_coloring(*loaded.steiner)
                                    : skolem_coloring(*loaded.steiner);
      const int bound = f.scheme == "bose" ? bose_span_bound(s.n()) : skolem_span_bound(s.n());
      note = "span_bound," + std::to_string(bound);
    } else if (f.scheme == "bicolor") {
      const auto bi = bicoloring_search(s);
      if (!bi) throw Exit{kSchemeFailure, "system has no bicoloring"};
      const BicoloringBound bb = bicoloring_to_bound(s, *bi);
      coloring = hole_coloring(s, bb.hole);
      note = "bicoloring_sizes," + std::to_string(bi->sizes[0]) + ',' +
             std::to_string(bi->sizes[1]) + ',' + std::to_string(bi->sizes[2]) +
             "\nbicoloring_bound," + std::to_string(bb.bound);
    } else {
      throw Exit{kParameterFailure, "unknown scheme '" + f.scheme + "'"};
    }
  } catch (const StsError& e) {
    switch (e.code()) {
      case ErrorCode::kMissingLabels:
      case ErrorCode::kInvalidHole:
      case ErrorCode::kMalformedCertificate:
      case ErrorCode::kEmptyClass:
        throw Exit{kSchemeFailure, e.what()};
      default:
        throw;
    }
  }

  Sink sink(f.out, out);
  write_coloring(*sink, *coloring);
  std::ostream& summary = sink.to_file() ? out : err;
  write_color_summary(summary, *coloring);
  if (!note.empty()) summary << note << '\n';
  return kOk;
}

// random -------------------------------------------------------------------

struct RandomFlags {
  std::string process;
  int n = 0;
  int m = -1;
  double p = -1.0;
  std::uint64_t seed = 1;
  int max_restarts = 1000;
  std::string out;
};

int cmd_random(const RandomFlags& f, std::ostream& out) {
  try {
    if (f.n < 0) throw StsError(ErrorCode::kBadM, "n must be non-negative");
    if (f.process == "triangle-removal") {
      if (f.m < 0) throw Exit{kParameterFailure, "--m is required"};
      const ProcessOutcome r = triangle_removal(f.n, f.m, f.seed);
      if (r.stuck) {
        throw Exit{kConstructionFailure,
                   "process stuck after " + std::to_string(r.system.triples.size()) +
                       " triples"};
      }
      Sink sink(f.out, out);
      write_sts(*sink, r.system.to_system());
    } else if (f.process == "binomial" || f.process == "linearized") {
      if (f.p < 0) throw Exit{kParameterFailure, "--p is required"};
      const TripleSystem g = binomial_3graph(f.n, f.p, f.seed);
      Sink sink(f.out, out);
      if (f.process == "binomial") {
        write_sts(*sink, g);
      } else {
        write_sts(*sink, linearize(g).to_system());
      }
    } else if (f.process == "sts") {
      const SteinerSystem s = random_sts(f.n, f.seed, f.max_restarts);
      Sink sink(f.out, out);
      write_sts(*sink, s);
    } else {
      throw Exit{kParameterFailure, "unknown process '" + f.process + "'"};
    }
  } catch (const StsError& e) {
    throw Exit{kParameterFailure, e.what()};
  }
  return kOk;
}

// experiment ---------------------------------------------------------------

struct DiscrepancyFlags {
  int n = 0;
  int samples = 10;
  std::uint64_t seed = 1;
  std::string csv;
  bool timing = false;
  BudgetFlags budget;
};

int cmd_discrepancy(const DiscrepancyFlags& f, std::ostream& out, std::ostream& err) {
  if (f.samples < 0) throw Exit{kParameterFailure, "--samples must be >= 0"};
  ExperimentConfig cfg;
  cfg.n = f.n;
  cfg.samples = f.samples;
  cfg.seed = f.seed;
  cfg.budget = f.budget.budget();
  cfg.jobs = f.budget.jobs;
  progress(err, "discrepancy experiment n=" + std::to_string(f.n) + " samples=" +
                    std::to_string(f.samples));
  std::vector<ExperimentRow> rows;
  try {
    rows = experiment_discrepancy(cfg);
  } catch (const StsError& e) {
    throw Exit{kParameterFailure, e.what()};
  }
  if (!f.csv.empty()) {
    std::ofstream csv(f.csv, std::ios::binary);
    if (!csv) throw Exit{kInputFailure, "cannot write " + f.csv};
    write_experiment_csv(csv, rows, f.timing);
    std::ofstream meta(f.csv + ".meta.json", std::ios::binary);
    meta << nlohmann::json{
                {"schema", "sts-experiment/1"},
                {"experiment", "discrepancy"},
                {"n", f.n},
                {"samples", f.samples},
                {"seed", f.seed},
                {"partial_m", std::lround(f.n * (f.n - 1) / 12.0)},
                {"caveat",
                 "random-sts rows come from triangle removal completed by "
                 "hill-climbing; they are not uniform samples of all Steiner "
                 "triple systems"}}
                .dump(2)
         << '\n';
  }
  write_summary_table(out, summarize(rows, f.n));
  return kOk;
}

int cmd_cdr(int kmax, std::ostream& out) {
  if (kmax < 0) throw Exit{kParameterFailure, "--kmax must be >= 0"};
  out << "k,M,N,r\n";
  for (std::size_t k = 0; const CdrTerm& t : cdr_sequence(kmax)) {
    out << k++ << ',' << t.m << ',' << t.n << ',' << std::setprecision(17)
        << t.ratio_approx << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner triple system toolkit", "sts"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build a Steiner triple system");
  gen_cmd->add_option("--construction", gen.construction, "fano | s9 | bose | skolem")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Order");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--quasigroup", gen.quasigroup, "standard | random (bose)");
  gen_cmd->add_option("--qseed", gen.qseed, "Seed for --quasigroup random");

  AnalyzeFlags analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute parameters and bounds");
  analyze_cmd->add_option("-i,--in", analyze.in, "Input system")->required();
  analyze_cmd->add_option("--param", analyze.param, "alpha | alpha-star3 | mc3 | all")
      ->check(CLI::IsMember({"alpha", "alpha-star3", "mc3", "all"}));
  analyze_cmd->add_option("-o,--out", analyze.out, "Report file (default stdout)");
  analyze_cmd->add_flag("--timing", analyze.timing, "Include wall-clock times");
  analyze.budget.attach(analyze_cmd);

  ColorFlags color;
  auto* color_cmd = app.add_subcommand("color", "Build an explicit 3-coloring");
  color_cmd->add_option("-i,--in", color.in, "Input system")->required();
  color_cmd->add_option("--scheme", color.scheme, "hole | bose | skolem | bicolor")
      ->required();
  color_cmd->add_option("-o,--out", color.out, "Coloring file (default stdout)");
  color_cmd->add_option("--hole-file", color.hole_file, "Use this hole for --scheme hole");
  color.budget.attach(color_cmd);

  RandomFlags random;
  auto* random_cmd = app.add_subcommand("random", "Sample a random (partial) system");
  random_cmd->add_option("--process", random.process,
                         "triangle-removal | binomial | linearized | sts")
      ->required();
  random_cmd->add_option("--n", random.n, "Order")->required();
  random_cmd->add_option("--m", random.m, "Steps of triangle removal");
  random_cmd->add_option("--p", random.p, "Triple probability");
  random_cmd->add_option("--seed", random.seed, "Seed");
  random_cmd->add_option("--max-restarts", random.max_restarts, "Attempts for --process sts");
  random_cmd->add_option("-o,--out", random.out, "Output file (default stdout)");

  auto* experiment_cmd = app.add_subcommand("experiment", "Run an experiment");
  experiment_cmd->require_subcommand(1);
  DiscrepancyFlags disc;
  auto* disc_cmd = experiment_cmd->add_subcommand("discrepancy", "alpha*_3 on random systems");
  disc_cmd->add_option("--n", disc.n, "Order")->required();
  disc_cmd->add_option("--samples", disc.samples, "Samples");
  disc_cmd->add_option("--seed", disc.seed, "Master seed");
  disc_cmd->add_option("--csv", disc.csv, "CSV output");
  disc_cmd->add_flag("--timing", disc.timing, "Fill the seconds column");
  disc.budget.attach(disc_cmd);
  int kmax = 12;
  auto* cdr_cmd = experiment_cmd->add_subcommand("cdr", "Bicoloring ratio sequence");
  cdr_cmd->add_option("--kmax", kmax, "Last index");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
    if (*color_cmd) return cmd_color(color, out, err);
    if (*random_cmd) return cmd_random(random, out);
    if (*disc_cmd) return cmd_discrepancy(disc, out, err);
    if (*cdr_cmd) return cmd_cdr(kmax, out);
  } catch (const Exit& e) {
    err << "sts: " << e.message << '\n';
    return e.code;
  } catch (const StsError& e) {
    err << "sts: " << e.what() << '\n';
    return kInputFailure;
  }
  return kUsage;
}

}  // namespace sts::cli
