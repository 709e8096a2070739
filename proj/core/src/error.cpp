#include "lgk/error.hpp"

namespace lgk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::InvalidScaling: return "InvalidScaling";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::UnassignedSymbol: return "UnassignedSymbol";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    case ErrorCode::InvalidRCochain: return "InvalidRCochain";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::InconclusiveBound: return "InconclusiveBound";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::EnumerationCap: return "EnumerationCap";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

}  // namespace lgk
