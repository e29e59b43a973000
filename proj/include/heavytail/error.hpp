#pragma once

#include <stdexcept>
#include <string>

namespace heavytail {

// Single exception type for the whole library. The code identifies the
// failure class so callers and tests can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  enum class Code {
    // domain / construction
    InvalidSpec,
    ZeroVector,
    NonFinite,
    OutOfRange,
    NonPositiveBox,
    NonPositiveArgument,
    DomainViolation,
    DegenerateCorrelation,
    NonMonotoneTransform,
    BadBlockSize,
    // estimation
    DegenerateSample,
    BadK,
    BadWeights,
    TooFewExceedances,
    GridMismatch,
    DegenerateConditional,
    Unsupported,
    // io / reporting
    ParseError,
    RaggedRows,
    EmptyInput,
    MissingBlock,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

[[noreturn]] inline void fail(Error::Code code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace heavytail
