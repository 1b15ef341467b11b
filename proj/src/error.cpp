#include "bihole/error.hpp"

namespace bihole {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySide: return "EmptySide";
    case ErrorKind::UnbalancedGraph: return "UnbalancedGraph";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::MalformedEdgeLine: return "MalformedEdgeLine";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::NegativeD: return "NegativeD";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace bihole
