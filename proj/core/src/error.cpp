#include "sts/error.hpp"

namespace sts {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateTriple: return "DuplicateTriple";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDegenerateTriple: return "DegenerateTriple";
    case ErrorCode::kPairUncovered: return "PairUncovered";
    case ErrorCode::kPairMulticovered: return "PairMulticovered";
    case ErrorCode::kBadOrder: return "BadOrder";
    case ErrorCode::kMalformedCertificate: return "MalformedCertificate";
    case ErrorCode::kEvenOrder: return "EvenOrder";
    case ErrorCode::kOddOrder: return "OddOrder";
    case ErrorCode::kNotLatin: return "NotLatin";
    case ErrorCode::kNonIdempotentQuasigroup: return "NonIdempotentQuasigroup";
    case ErrorCode::kNonHalfIdempotentQuasigroup:
      return "NonHalfIdempotentQuasigroup";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kBadColorCount: return "BadColorCount";
    case ErrorCode::kInvalidHole: return "InvalidHole";
    case ErrorCode::kMissingLabels: return "MissingLabels";
    case ErrorCode::kMonochromaticTriple: return "MonochromaticTriple";
    case ErrorCode::kRainbowTriple: return "RainbowTriple";
    case ErrorCode::kEmptyClass: return "EmptyClass";
    case ErrorCode::kBadM: return "BadM";
    case ErrorCode::kBadProbability: return "BadProbability";
    case ErrorCode::kRestartsExhausted: return "RestartsExhausted";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sts
