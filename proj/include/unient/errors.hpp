#pragma once

#include <stdexcept>
#include <string>

namespace unient {

/// Input violates a documented precondition or a parameter domain.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed text or file input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// The residual-set construction has no rule covering the requested coarsening.
class XiUndefinedError : public DomainError {
 public:
  explicit XiUndefinedError(const std::string& what) : DomainError(what) {}
};

}  // namespace unient
