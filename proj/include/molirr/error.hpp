#pragma once

#include <stdexcept>
#include <string>

namespace molirr {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EmptyGraph,
  DisconnectedGraph,
  InvalidParams,
  InternalConsistency,
  Parse,
  NotConverged,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace molirr
