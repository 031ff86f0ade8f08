#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropvol {

enum class ErrorCode {
  DimensionMismatch,
  NegativeCycle,
  SizeLimitExceeded,
  InfiniteEntry,
  NotKleeneStar,
  Singular,
  NotUnimodular,
  ZeroGamma,
  NonSimple,
  ObjectiveExhausted,
  UnsupportedDimension,
  GenerationExhausted,
  InvalidArgument,
  ParseError,
  RaggedRows,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries the module that produced it,
// so front ends can report "error [module] Code: message".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string_view module, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string_view module_;
};

}  // namespace tropvol
