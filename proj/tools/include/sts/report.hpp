#ifndef STS_REPORT_HPP
#define STS_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "sts/search.hpp"
#include "sts/system.hpp"

namespace sts::cli {

struct AnalysisInput {
  const SteinerSystem* steiner = nullptr;  // set when the input is Steiner
  const TripleSystem* system = nullptr;
  std::optional<ParamResult> alpha;
  std::optional<ParamResult> alpha_star3;
  std::optional<ParamResult> mc3;
  bool timing = false;
  double seconds = 0.0;
};

/// Builds the sts-report/1 document. Every certificate is re-verified first;
/// throws std::logic_error if one does not check out.
nlohmann::json build_report(const AnalysisInput& in);

/// Inequality checks implied by the stored parameter values. Only the checks
/// whose hypotheses hold (Steiner input, exact values where needed) appear.
nlohmann::json compute_verdicts(const nlohmann::json& report);

/// Recomputes every verdict from the numbers stored in `report` and returns
/// whether they all match the stored booleans.
bool verdicts_consistent(const nlohmann::json& report);

}  // namespace sts::cli

#endif  // STS_REPORT_HPP
