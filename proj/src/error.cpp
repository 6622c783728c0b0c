#include "stanley/error.hpp"

namespace stanley {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::empty_seed: return "EmptySeed";
    case ErrorCode::negative_element: return "NegativeElement";
    case ErrorCode::not_progression_free: return "NotProgressionFree";
    case ErrorCode::bad_k: return "BadK";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::capacity_exceeded: return "CapacityExceeded";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::incomplete_prefix: return "IncompletePrefix";
    case ErrorCode::empty_range: return "EmptyRange";
    case ErrorCode::bad_input: return "BadInput";
    case ErrorCode::bad_epsilon: return "BadEpsilon";
    case ErrorCode::too_short: return "TooShort";
    case ErrorCode::too_few_samples: return "TooFewSamples";
    case ErrorCode::degenerate_samples: return "DegenerateSamples";
    case ErrorCode::unsupported_k: return "UnsupportedK";
    case ErrorCode::io_failure: return "IoFailure";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::consistency_error: return "ConsistencyError";
  }
  return "Unknown";
}

}  // namespace stanley
