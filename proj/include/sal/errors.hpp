#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sal {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A derivative of order above the configured jet bound was requested.
class OrderOverflowError : public Error {
 public:
  OrderOverflowError(int order, int max_order)
      : Error("jet order " + std::to_string(order) + " exceeds maximum " +
              std::to_string(max_order)),
        order_(order),
        max_order_(max_order) {}
  int order() const { return order_; }
  int max_order() const { return max_order_; }

 private:
  int order_;
  int max_order_;
};

/// Raised by match_multiple when the reference expression is zero.
class DegenerateMatchError : public Error {
 public:
  using Error::Error;
};

/// An algebraic operation left the closed expression algebra
/// (non-affine exponent, division by a u-dependent quantity, ...).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Byte range into a parsed input plus the line/column of its start.
struct SourceSpan {
  std::size_t start{0};
  std::size_t end{0};
  int line{1};
  int column{1};
};

/// Syntax or structure error in user input, located by a span.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
        span_(span) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

class UnsupportedSpecError : public Error {
 public:
  using Error::Error;
};

class NonConservationError : public Error {
 public:
  using Error::Error;
};

}  // namespace sal
