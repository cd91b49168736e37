#ifndef SEPLAT_ERROR_HPP
#define SEPLAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace seplat {

enum class ErrorCode {
  Cycle,
  DuplicateEdge,
  UnknownVertex,
  DuplicateVertex,
  InvalidLabel,
  SelfLoop,
  InvalidPath,
  InvalidQuery,
  AdjacentVertices,
  NotCollateral,
  KindMismatch,
  NotSpacelike,
  BudgetExceeded,
  UnknownCell,
  DisjointnessViolation,
  SeparatedInput,
  Parse,
};

const char* to_string(ErrorCode code);

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace seplat

#endif  // SEPLAT_ERROR_HPP
