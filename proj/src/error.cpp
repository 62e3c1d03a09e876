#include "gft/error.hpp"

namespace gft {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DivisionAtZero: return "DivisionAtZero";
    case ErrorKind::BranchPointOrPole: return "BranchPointOrPole";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EvaluationFailed: return "EvaluationFailed";
    case ErrorKind::LocallyNonUnivalent: return "LocallyNonUnivalent";
    case ErrorKind::DegenerateMobius: return "DegenerateMobius";
    case ErrorKind::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorKind::NonnegativityViolated: return "NonnegativityViolated";
    case ErrorKind::ExtrapolationDiverged: return "ExtrapolationDiverged";
    case ErrorKind::QuadratureFailed: return "QuadratureFailed";
    case ErrorKind::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorKind::NonAnalyticSample: return "NonAnalyticSample";
    case ErrorKind::YVanishes: return "YVanishes";
  }
  return "Unknown";
}

}  // namespace gft
