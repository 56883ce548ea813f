#ifndef STS_CLI_HPP
#define STS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sts::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kConstructionFailure = 2,
  kInputFailure = 3,
  kSchemeFailure = 4,
  kParameterFailure = 5,
};

/// Runs one command line (without the program name). Payloads go to `out`,
/// progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sts::cli

#endif  // STS_CLI_HPP
