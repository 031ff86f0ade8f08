#include "tropvol/error.hpp"

namespace tropvol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeCycle: return "NegativeCycle";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::InfiniteEntry: return "InfiniteEntry";
    case ErrorCode::NotKleeneStar: return "NotKleeneStar";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ZeroGamma: return "ZeroGamma";
    case ErrorCode::NonSimple: return "NonSimple";
    case ErrorCode::ObjectiveExhausted: return "ObjectiveExhausted";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string_view module, const std::string& message)
    : std::runtime_error(message), code_(code), module_(module) {}

}  // namespace tropvol
