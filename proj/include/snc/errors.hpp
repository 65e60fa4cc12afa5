#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace snc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance, weighting or certificate text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A structural invariant of a digraph or weighting would be violated
/// (loop, two-cycle, negative weight, unknown vertex, size mismatch).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain. `offending` names the vertex
/// that witnesses the violation when there is one.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what,
                             std::optional<std::size_t> offending = std::nullopt)
      : Error(what), offending_(offending) {}

  std::optional<std::size_t> offending() const noexcept { return offending_; }

 private:
  std::optional<std::size_t> offending_;
};

/// A result failed its own exact re-verification. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace snc
