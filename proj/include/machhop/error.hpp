#pragma once

#include <stdexcept>
#include <string>

namespace machhop {

enum class ErrorKind {
  precondition,     // caller violated an operation's input contract
  capability,       // valid input beyond what this build can construct
  malformed_input,  // structurally broken value (range, duplicates)
  parse,            // text that does not follow an export format
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::precondition, what);
}

}  // namespace machhop
