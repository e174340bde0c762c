#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycleprefix {

enum class ErrorKind {
  IndexOutOfRange,
  SymbolPresent,
  SymbolOutOfAlphabet,
  InvalidVertex,
  InvalidParams,
  ParameterDomain,
  NonBijective,
  SameVertex,
  UndefinedAlpha,
  DomainError,
  InstanceTooLarge,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers (and the
/// CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cycleprefix
