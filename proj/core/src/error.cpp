#include "seplat/error.hpp"

namespace seplat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Cycle: return "CycleError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::AdjacentVertices: return "AdjacentVertices";
    case ErrorCode::NotCollateral: return "NotCollateral";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownCell: return "UnknownCell";
    case ErrorCode::DisjointnessViolation: return "DisjointnessViolation";
    case ErrorCode::SeparatedInput: return "SeparatedInput";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Error";
}

}  // namespace seplat
