#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdg {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SDG_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

SDG_DEFINE_ERROR(InvalidGraph);
SDG_DEFINE_ERROR(InvalidEdge);
SDG_DEFINE_ERROR(MissingArc);
SDG_DEFINE_ERROR(CycleBudgetExceeded);
SDG_DEFINE_ERROR(OracleBoundExceeded);
SDG_DEFINE_ERROR(SizeOverflow);
SDG_DEFINE_ERROR(ConvergenceFailure);
SDG_DEFINE_ERROR(OrderMismatch);
SDG_DEFINE_ERROR(QuadratureFailure);
SDG_DEFINE_ERROR(NotInDelta1);
SDG_DEFINE_ERROR(InvalidFamilySpec);
SDG_DEFINE_ERROR(SearchBudgetExceeded);
SDG_DEFINE_ERROR(FixtureValidationFailure);
SDG_DEFINE_ERROR(InvalidArgument);

#undef SDG_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sdg
