#pragma once

#include <stdexcept>
#include <string>

namespace qniep {

// Library-wide error codes. The CLI maps these onto process exit codes, so
// every throwing path must pick the code that matches its contract.
enum class ErrorCode {
  kParseError,          // malformed rational / list / certificate text
  kEmptyInput,          // normalize() called with an empty list
  kNotASublist,         // set_minus with a non-sub-multiset
  kNotInContext,        // input outside Pi_Q (Sigma < 0 or rho != lambda_1)
  kSearchTooLarge,      // configured search bound exceeded
  kBadMove,             // ill-formed move in a replay sequence
  kInvalidCertificate,  // certificate handed to a constructor/compiler is bogus
  kNotSuleimanova,      // realize_su on a non-Suleimanova list
  kUnsupportedK,        // diagonal/spectrum decision beyond k = 2
  kMissingWitness,      // Pe2+ verification without a witness matrix
  kRejectionStall,      // sampler exceeded its redraw cap
  kInternalCheckFailed, // a self-check that should be unreachable fired
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qniep
