#include "clawcycles/error.hpp"

namespace clawcycles {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::InvalidCycle: return "InvalidCycle";
    case ErrorKind::NotAHole: return "NotAHole";
    case ErrorKind::NotCubic: return "NotCubic";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::ClawFound: return "ClawFound";
    case ErrorKind::C4Found: return "C4Found";
    case ErrorKind::MinDegree: return "MinDegree";
    case ErrorKind::CutVertex: return "CutVertex";
    case ErrorKind::NotSmallestHole: return "NotSmallestHole";
    case ErrorKind::NoTriangleAt: return "NoTriangleAt";
    case ErrorKind::MultiLink: return "MultiLink";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::TargetMissing: return "TargetMissing";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool Error::is_precondition_failure() const noexcept {
  switch (kind_) {
    case ErrorKind::ClawFound:
    case ErrorKind::C4Found:
    case ErrorKind::MinDegree:
    case ErrorKind::CutVertex:
    case ErrorKind::NotAHole:
    case ErrorKind::NotSmallestHole:
    case ErrorKind::NotCubic:
      return true;
    default:
      return false;
  }
}

}  // namespace clawcycles
