#ifndef STS_ERROR_HPP
#define STS_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sts {

enum class ErrorCode {
  kDuplicateTriple,
  kVertexOutOfRange,
  kDegenerateTriple,
  kPairUncovered,
  kPairMulticovered,
  kBadOrder,
  kMalformedCertificate,
  kEvenOrder,
  kOddOrder,
  kNotLatin,
  kNonIdempotentQuasigroup,
  kNonHalfIdempotentQuasigroup,
  kBadK,
  kBadColorCount,
  kInvalidHole,
  kMissingLabels,
  kMonochromaticTriple,
  kRainbowTriple,
  kEmptyClass,
  kBadM,
  kBadProbability,
  kRestartsExhausted,
  kTooLarge,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

/// Every recoverable failure in the library is reported as an StsError.
/// `pair()` is set for the pair-coverage errors, `index()` for errors tied
/// to a particular triple.
class StsError : public std::runtime_error {
 public:
  StsError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  StsError(ErrorCode code, const std::string& what, std::pair<int, int> pair)
      : StsError(code, what) {
    pair_ = pair;
  }

  StsError(ErrorCode code, const std::string& what, std::size_t index)
      : StsError(code, what) {
    index_ = index;
  }

  ErrorCode code() const noexcept { return code_; }
  const std::optional<std::pair<int, int>>& pair() const noexcept {
    return pair_;
  }
  const std::optional<std::size_t>& index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::pair<int, int>> pair_;
  std::optional<std::size_t> index_;
};

}  // namespace sts

#endif  // STS_ERROR_HPP
