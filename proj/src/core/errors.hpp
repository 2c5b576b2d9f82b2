#pragma once

#include <stdexcept>
#include <string>

namespace omega {

enum class ErrorCode {
  EmptyInput,
  ZeroGenerator,
  NonCoprime,
  Overflow,
  InvalidArgument,
  NotAGenerator,
  InfeasibleInput,
  EmptyPool,
  LimitExceeded,
  IterationCapExceeded,
  BoxTooLarge,
  GenerationFailed,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace omega
