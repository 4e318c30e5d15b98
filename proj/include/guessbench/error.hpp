#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace guessbench {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An action outside the game's action range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Text that does not match a known game description template.
class TranslationError : public Error {
 public:
  TranslationError(const std::string& what, std::string fragment)
      : Error(what), fragment_(std::move(fragment)) {}
  const std::string& fragment() const { return fragment_; }

 private:
  std::string fragment_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed input data; line is 1-based, 0 when not line-oriented.
class DataError : public Error {
 public:
  DataError(const std::string& what, std::size_t line = 0)
      : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyError : public Error {
 public:
  RankDeficiencyError(const std::string& what, std::size_t column)
      : Error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

}  // namespace guessbench
