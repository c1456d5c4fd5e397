#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace centra {

enum class Errc {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  InvalidParam,
  ExceedsCap,
  InvalidTwist,
  NotNormal,
  NotSubgroup,
  OutOfRange,
  ExceedsThreshold,
  AbelianInput,
  SyntaxError,
  UnknownAtom,
  SemidirectNonCyclic,
  IoError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parser failure; offset is the byte position in the input text.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, const std::string& what)
      : Error(code, "at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace centra
