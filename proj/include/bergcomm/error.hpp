#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bergcomm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values of different ambient dimension were combined.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation (alpha <= -1,
/// x <= 0 for log-gamma, an index outside the valid block, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input. `where` is a byte offset or a JSON pointer.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string where)
      : Error(where.empty() ? what : what + " (at " + where + ")"), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace bergcomm
