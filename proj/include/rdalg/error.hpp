#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdalg {

enum class ErrorCode {
  InvalidArgument,
  NotDivisible,
  MissingSymbol,
  NotADivisor,
  NonUnitLeadingCoefficient,
  LeadingCoefficientNotZero,
  LeadingCoefficientNotOne,
  ConstantTermNotOne,
  TruncationTooSmall,
  KindMismatch,
  SingularDiagonal,
  SyntaxError,
  UnknownFunction,
  ArityMismatch,
  Io,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// C layer can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the polynomial and expression parsers. offset is the byte offset
// into the input where parsing stopped.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : Error(ErrorCode::SyntaxError,
              message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace rdalg
