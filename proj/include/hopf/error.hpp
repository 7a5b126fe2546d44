#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopf {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  CharMismatch,
  MalformedData,
  ShapeMismatch,
  Singular,
  NotGroupLike,
  BudgetExceeded,
  WrongField,
  NotCocentral,
  InvalidSystem,
  NotHopfMap,
  NotASection,
  NotCoalgebraMap,
  NotCentralPrimitive,
  PreconditionViolated,
  GeneratorsDontSpan,
  UnknownModel,
  InvalidArgument,
};

const char* errc_name(Errc code);

// Single exception type for the library; the code identifies the failure
// class, the message carries the details.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(Errc::ParseError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hopf
