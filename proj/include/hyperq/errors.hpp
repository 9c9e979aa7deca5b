#ifndef HYPERQ_ERRORS_HPP
#define HYPERQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedGrade : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

// mu(x) + lambda(x) > 1 at `element`.
struct ConstraintViolated : Error {
  int element;
  ConstraintViolated(int element, const std::string &msg)
      : Error(msg), element(element) {}
};

struct EmptySubset : Error {
  using Error::Error;
};

struct OrderLimitExceeded : Error {
  using Error::Error;
};

struct NotASubHyperquasigroup : Error {
  using Error::Error;
};

struct NotAHyperquasigroup : Error {
  using Error::Error;
};

struct ParameterOrderViolated : Error {
  using Error::Error;
};

struct ChainHypothesisViolated : Error {
  using Error::Error;
};

struct IllDefinedProduct : Error {
  int class_a;
  int class_b;
  IllDefinedProduct(int a, int b, const std::string &msg)
      : Error(msg), class_a(a), class_b(b) {}
};

struct NotALatinSquare : Error {
  using Error::Error;
};

struct AlphaOnBoundary : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line, int column, const std::string &msg)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line(line), column(column) {}
};

}  // namespace hyperq

#endif
