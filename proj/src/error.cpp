#include "molirr/error.hpp"

namespace molirr {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::NotConverged: return "NotConverged";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace molirr
