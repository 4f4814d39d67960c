#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lu {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t col)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DimensionMismatch : public Error {
  using Error::Error;
};
class ExponentOverflow : public Error {
  using Error::Error;
};
class ResourceLimit : public Error {
  using Error::Error;
};
class UnsupportedInstance : public Error {
  using Error::Error;
};
class PreconditionError : public Error {
  using Error::Error;
};
class HypothesisFailed : public Error {
  using Error::Error;
};
class ZeroDivisorQueryOnZero : public Error {
  using Error::Error;
};
class NotAProperIdeal : public Error {
  using Error::Error;
};
class ValueInequalityViolated : public Error {
  using Error::Error;
};
class SupportDivision : public Error {
  using Error::Error;
};
class ChartMismatch : public Error {
  using Error::Error;
};
class IsomorphismCheckFailed : public Error {
  using Error::Error;
};
class IoError : public Error {
  using Error::Error;
};

/// A valuation axiom failed; `axiom` is one of V1, V2, V3, V4, centering,
/// initial-ideal.
class CertificationError : public Error {
 public:
  CertificationError(std::string axiom, const std::string& witness)
      : Error("certification failed (" + axiom + "): " + witness),
        axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

}  // namespace lu
