#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treealg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: tree literals, automaton files, table files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_ = 0;
};

/// A tree literal that is syntactically fine but does not fit the alphabet:
/// unknown symbol or leaf, or wrong number of arguments.
class AlphabetMismatchError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Well-formed input that violates a semantic rule: arity, alphabet
/// membership, totality, or an operation's precondition.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or saturation exceeded its configured cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Nerode synthesis could not close its table at the requested heights.
class InsufficientHeightError : public Error {
 public:
  using Error::Error;
};

}  // namespace treealg
