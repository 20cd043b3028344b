#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable alphabets.
class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch(std::size_t lhs, std::size_t rhs);
};

/// A size guard refused the computation. `estimate` is the work that would
/// have been needed, `limit` the configured ceiling.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::string what, std::uint64_t estimate, std::uint64_t limit);

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t limit_;
};

/// Raised for inputs that require a chordal graph. Carries a chordless cycle.
class NotChordal : public Error {
 public:
  explicit NotChordal(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Text input could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A property proved for paths was observed to fail. For chordal
/// experiments the caller reports it as a finding instead.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace coverq
