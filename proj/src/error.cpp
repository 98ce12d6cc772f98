#include "parabolic/error.hpp"

namespace parabolic {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NonZeroConstantTerm: return "NonZeroConstantTerm";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::DegenerateParameter: return "DegenerateParameter";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::PathThroughSingularity: return "PathThroughSingularity";
    case ErrorCode::SeriesOutOfDomain: return "SeriesOutOfDomain";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::AtBifurcation: return "AtBifurcation";
    case ErrorCode::ValidationMismatch: return "ValidationMismatch";
    case ErrorCode::NewtonDivergence: return "NewtonDivergence";
    case ErrorCode::RootLoss: return "RootLoss";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::CodimensionMismatch: return "CodimensionMismatch";
  }
  return "Unknown";
}

}  // namespace parabolic
