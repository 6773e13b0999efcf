#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace haantjes {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { Syntax, UnknownVariable, ZeroDivision, BadExponent };

/// Expression parsing failure; position is a byte offset into the source.
struct ParseError : Error {
  ParseError(ParseErrorKind k, std::size_t pos, const std::string& msg)
      : Error(msg), kind(k), position(pos) {}
  ParseErrorKind kind;
  std::size_t position;
};

struct ChartMismatchError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

/// Denominator vanishes at the evaluation point.
struct PoleError : Error {
  using Error::Error;
};

struct NonPolynomialError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

/// Independent computation routes disagreed. This is an internal bug in the
/// library, never a property of the input; it is surfaced, not swallowed.
struct RouteDisagreementError : Error {
  using Error::Error;
};

struct MalformedSpecError : Error {
  using Error::Error;
};

struct NotRationalIntegralError : Error {
  using Error::Error;
};

/// A 1-form required to be closed was not; witness names the failing
/// component of its exterior derivative, in expression syntax.
struct NotClosedError : Error {
  NotClosedError(const std::string& msg, std::string w)
      : Error(msg), witness(std::move(w)) {}
  std::string witness;
};

struct HamiltonianMismatchError : Error {
  HamiltonianMismatchError(const std::string& msg, std::string w)
      : Error(msg), witness(std::move(w)) {}
  std::string witness;
};

/// Bundle loading/validation failure; path points at the offending node.
struct BundleError : Error {
  BundleError(const std::string& msg, std::string p)
      : Error(msg), path(std::move(p)) {}
  std::string path;
};

}  // namespace haantjes
