#ifndef SPERKIT_ERRORS_HPP
#define SPERKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sperkit {

// Base class carrying a stable machine-readable kind string.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct ParseError : Error {
  int line, column;
  ParseError(const std::string& msg, int ln = 1, int col = 1)
      : Error("ParseError", msg + " (line " + std::to_string(ln) + ", column " +
                                std::to_string(col) + ")"),
        line(ln),
        column(col) {}
};

struct UnknownVariable : Error {
  explicit UnknownVariable(const std::string& name)
      : Error("UnknownVariable", "undeclared identifier '" + name + "'") {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& msg = "zero polynomial")
      : Error("ZeroPolynomial", msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg = "division by zero")
      : Error("DivisionByZero", msg) {}
};

struct NegativeRadicand : Error {
  explicit NegativeRadicand(const std::string& msg = "negative radicand")
      : Error("NegativeRadicand", msg) {}
};

struct NotClosed : Error {
  explicit NotClosed(const std::string& msg)
      : Error("NotClosed", msg) {}
};

struct MissingAssignment : Error {
  explicit MissingAssignment(const std::string& name)
      : Error("MissingAssignment", "no value assigned to '" + name + "'") {}
};

struct ResourceLimit : Error {
  explicit ResourceLimit(const std::string& msg)
      : Error("ResourceLimit", msg) {}
};

struct DomainMismatch : Error {
  explicit DomainMismatch(const std::string& msg = "section domains differ")
      : Error("DomainMismatch", msg) {}
};

struct InvalidSection : Error {
  explicit InvalidSection(const std::string& msg = "section is not validated")
      : Error("InvalidSection", msg) {}
};

struct VanishingSection : Error {
  explicit VanishingSection(const std::string& msg =
                                "section vanishes somewhere on its domain")
      : Error("VanishingSection", msg) {}
};

struct NegativeSection : Error {
  explicit NegativeSection(const std::string& msg =
                               "section is negative somewhere on its domain")
      : Error("NegativeSection", msg) {}
};

struct DomainNotContained : Error {
  explicit DomainNotContained(const std::string& msg =
                                  "section domain is not contained in the target set")
      : Error("DomainNotContained", msg) {}
};

struct PointNotInDomain : Error {
  explicit PointNotInDomain(const std::string& msg =
                                "evaluation point is outside the section domain")
      : Error("PointNotInDomain", msg) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error("Precondition", msg) {}
};

// Internal invariant violations; reaching one is a bug, not user error.
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error("InternalError", msg) {}
};

}  // namespace sperkit

#endif
