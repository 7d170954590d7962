#pragma once

#include <stdexcept>
#include <string>

namespace hlpoly {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Raised when a rational cannot be mapped into Z/pZ because p divides its
// denominator.
class NonReducibleDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// alpha*m + a vanished at some index m that the evaluation needs.
class SingularParameter : public std::domain_error {
 public:
  SingularParameter(int m, const std::string& what) : std::domain_error(what), m_(m) {}
  int index() const noexcept { return m_; }

 private:
  int m_;
};

// Requested a coefficient beyond the order a series is known to.
class TruncationExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hlpoly
