#include "buckfire/error.hpp"

namespace buckfire {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTreeSpec: return "InvalidTreeSpec";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::StartOutOfRange: return "StartOutOfRange";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MissingLevels: return "MissingLevels";
    case ErrorCode::NotLoaded: return "NotLoaded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::EmptyRun: return "EmptyRun";
    case ErrorCode::TraceMismatch: return "TraceMismatch";
    case ErrorCode::MalformedBlockStructure: return "MalformedBlockStructure";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::ClosedFormUnavailable: return "ClosedFormUnavailable";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace buckfire
