#pragma once

#include <stdexcept>
#include <string>

namespace gofk {

// Raised when an input is well-formed but outside the domain of an operation
// (non-coprime lens parameters, a triple connected sum, an invalid curve).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text parsers for manifolds, matrices, words and files.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a file cannot be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gofk
