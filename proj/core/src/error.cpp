#include "mdl/error.hpp"

namespace mdl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::InputRequired: return "InputRequired";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::HasseMismatch: return "HasseMismatch";
    case ErrorCode::MultipleSources: return "MultipleSources";
    case ErrorCode::MultipleSinks: return "MultipleSinks";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::NotOuterplane: return "NotOuterplane";
    case ErrorCode::DirectedCycleInInnerDual: return "DirectedCycleInInnerDual";
    case ErrorCode::IsoFailure: return "IsoFailure";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::DuplicateComplement: return "DuplicateComplement";
    case ErrorCode::NotComplementary: return "NotComplementary";
    case ErrorCode::ChainNotSaturated: return "ChainNotSaturated";
    case ErrorCode::ProductMismatch: return "ProductMismatch";
    case ErrorCode::InvalidRowLengths: return "InvalidRowLengths";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::ColorClash: return "ColorClash";
    case ErrorCode::EmbeddingConflict: return "EmbeddingConflict";
  }
  return "Unknown";
}

}  // namespace mdl
