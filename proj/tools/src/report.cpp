#include "sts/report.hpp"

#include <stdexcept>

#include "sts/bounds.hpp"
#include "sts/decomposition.hpp"

namespace sts::cli {
namespace {

using nlohmann::json;

json param_json(const ParamResult& r, bool timing) {
  json j;
  j["value"] = r.value;
  j["exact"] = r.exact;
  j["nodes"] = r.spent.nodes;
  if (timing) j["seconds"] = r.spent.seconds;
  return j;
}

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("certificate failed to verify: ") + what);
}

json alpha_json(const TripleSystem& s, const ParamResult& r, bool timing) {
  const auto& set = std::get<std::vector<int>>(r.certificate);
  check(static_cast<int>(set.size()) == r.value, "alpha size");
  std::vector<char> in(static_cast<std::size_t>(s.n()), 0);
  for (int v : set) in[v] = 1;
  for (const Triple& t : s.triples()) {
    check(!(in[t.a] && in[t.b] && in[t.c]), "alpha independence");
  }
  json j = param_json(r, timing);
  j["certificate"] = set;
  return j;
}

json hole_json(const TripleSystem& s, const ParamResult& r, bool timing) {
  const auto& h = std::get<HoleCertificate>(r.certificate);
  check(h.a == r.value && verify_hole(s, h), "alpha_star3 hole");
  json j = param_json(r, timing);
  j["certificate"] = {{"k", h.k}, {"a", h.a}, {"parts", h.parts}};
  return j;
}

json mc_json(const TripleSystem& s, const ParamResult& r, bool timing) {
  const auto& c = std::get<EdgeColoring>(r.certificate);
  const LargestComponent largest = largest_mono_component(c);
  check(largest.size == r.value, "mc3 coloring");
  json j = param_json(r, timing);
  j["certificate"] = {
      {"r", c.r()},
      {"colors", c.colors()},
      {"largest_component",
       {{"size", largest.size}, {"color", largest.color}, {"vertices", largest.vertices}}}};
  if (s.n() >= 2 && pair_degree_min(s) >= 1) {
    const DecompositionResult d = decompose_3coloring(s, c);
    const DecompositionCheck ok = verify_decomposition(s, c, d);
    check(ok.ok, "mc3 decomposition");
    const char* names[] = {"L1", "L2", "L3"};
    json dj = {{"case", names[static_cast<int>(d.kind)]},
               {"blue", d.blue}, {"red", d.red}, {"green", d.green},
               {"verified", ok.ok}};
    if (d.kind == DecompositionCase::kL1) {
      dj["spanning"] = d.spanning;
    } else {
      dj["parts"] = {{"W", d.parts[0]}, {"X", d.parts[1]}, {"Y", d.parts[2]}, {"Z", d.parts[3]}};
    }
    j["decomposition"] = dj;
  }
  return j;
}

json verdict(const char* name, const char* statement, long long lhs,
             const char* relation, long long rhs) {
  const bool pass = std::string(relation) == "<=" ? lhs <= rhs : lhs >= rhs;
  return {{"name", name}, {"statement", statement}, {"lhs", lhs},
          {"relation", relation}, {"rhs", rhs}, {"pass", pass}};
}

}  // namespace

json compute_verdicts(const json& report) {
  json out = json::array();
  const long long n = report.at("n").get<long long>();
  const bool steiner = report.value("steiner", false);
  const json& params = report.at("parameters");
  const bool covered = report.value("pair_degree_min", 0) >= 1;
  const json* hole = params.contains("alpha_star3") ? &params["alpha_star3"] : nullptr;
  const json* mc = params.contains("mc3") ? &params["mc3"] : nullptr;

  if (hole && steiner) {
    out.push_back(verdict("alpha_star3_upper", "alpha_star3 <= floor(n/3) - 1",
                          (*hole)["value"].get<long long>(), "<=", n / 3 - 1));
  }
  if (mc && steiner) {
    out.push_back(verdict("mc3_lower", "mc3 >= ceil(2n/3) + 1",
                          (*mc)["value"].get<long long>(), ">=", (2 * n + 2) / 3 + 1));
  }
  if (mc && hole && covered && (*hole)["exact"].get<bool>()) {
    out.push_back(verdict("mc3_hole_lower", "mc3 >= n - 2 alpha_star3",
                          (*mc)["value"].get<long long>(), ">=",
                          n - 2 * (*hole)["value"].get<long long>()));
  }
  if (mc && hole && (*mc)["exact"].get<bool>()) {
    out.push_back(verdict("mc3_hole_upper", "mc3 <= n - alpha_star3",
                          (*mc)["value"].get<long long>(), "<=",
                          n - (*hole)["value"].get<long long>()));
  }
  return out;
}

json build_report(const AnalysisInput& in) {
  const TripleSystem& s = *in.system;
  json report;
  report["schema"] = "sts-report/1";
  report["n"] = s.n();
  report["m"] = s.size();
  report["construction"] = std::string(construction_name(
      in.steiner ? in.steiner->construction() : Construction::kUnknown));
  report["steiner"] = in.steiner != nullptr;
  report["pair_degree_min"] = s.n() >= 2 ? pair_degree_min(s) : 0;

  json params = json::object();
  if (in.alpha) params["alpha"] = alpha_json(s, *in.alpha, in.timing);
  if (in.alpha_star3) params["alpha_star3"] = hole_json(s, *in.alpha_star3, in.timing);
  if (in.mc3) params["mc3"] = mc_json(s, *in.mc3, in.timing);
  report["parameters"] = params;

  std::optional<int> a;
  if (in.alpha_star3 && in.alpha_star3->exact) a = in.alpha_star3->value;
  const ClosedFormBounds b = closed_form_bounds(s.n(), a);
  json bounds = {{"gyarfas", b.gyarfas},
                 {"alpha_upper", b.alpha_upper},
                 {"z2", b.z2},
                 {"z2_exceeds", b.z2_exceeds}};
  if (b.hole_upper) bounds["hole_upper"] = *b.hole_upper;
  if (b.hole_lower) bounds["hole_lower"] = *b.hole_lower;
  report["bounds"] = bounds;

  report["verdicts"] = compute_verdicts(report);
  if (in.timing) report["timing"] = {{"seconds", in.seconds}};
  return report;
}

bool verdicts_consistent(const json& report) {
  return report.contains("verdicts") &&
         compute_verdicts(report) == report.at("verdicts");
}

}  // namespace sts::cli
