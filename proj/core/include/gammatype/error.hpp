#pragma once

#include <stdexcept>
#include <string>

namespace gammatype {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an argument hits a pole of Gamma or a net pole of a rep.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, double location, int order)
      : Error(what), location_(location), order_(order) {}
  double location() const noexcept { return location_; }
  int order() const noexcept { return order_; }

 private:
  double location_;
  int order_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameter : public Error {
 public:
  using Error::Error;
};

// The requested method does not apply to this rep (e.g. gamma = 0 inversion).
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

class InvalidRep : public Error {
 public:
  using Error::Error;
};

}  // namespace gammatype
