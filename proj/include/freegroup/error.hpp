#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freegroup {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator id below 1.
class InvalidSymbolError : public Error {
 public:
  using Error::Error;
};

/// A syllable list that violates the reduced-word invariants.
class InvalidWordError : public Error {
 public:
  using Error::Error;
};

/// An exponent left the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Operand lengths that cannot be recycled against each other.
class RecyclingError : public Error {
 public:
  using Error::Error;
};

class InvalidAlphabetError : public Error {
 public:
  using Error::Error;
};

/// A generator id with no name in the alphabet (strict formatting only).
class OutOfAlphabetError : public Error {
 public:
  using Error::Error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// Malformed text. `position()` is the 0-based byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        message_(message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An expression identifier that is neither bound nor an alphabet name.
class UnboundIdentifierError : public Error {
 public:
  UnboundIdentifierError(const std::string& name, std::size_t position)
      : Error("unbound identifier '" + name + "' (at offset " +
              std::to_string(position) + ")"),
        name_(name),
        position_(position) {}

  const std::string& name() const noexcept { return name_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string name_;
  std::size_t position_;
};

}  // namespace freegroup
