#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dynamik {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by loaders and parsers. `location` is a 1-based line number for
/// line-oriented formats and a 0-based element index for structured ones.
class ParseError : public Error {
 public:
  ParseError(std::size_t location, const std::string& what)
      : Error(what), location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dynamik
