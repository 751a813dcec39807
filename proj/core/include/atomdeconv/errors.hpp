#pragma once

#include <stdexcept>
#include <string>

namespace atomdeconv {

// Base for failures of a numerical domain check (as opposed to bad arguments).
// The CLI maps these to a distinct exit code.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// The Gaussian damping factor exp(sigma^2 t^2 / 2) would leave double range.
class ExponentOverflow : public NumericError {
public:
  explicit ExponentOverflow(double exponent)
      : NumericError("damping exponent sigma^2/(2 h^2) = " + std::to_string(exponent) +
                     " exceeds 700; increase the bandwidth"),
        exponent_(exponent) {}
  double exponent() const { return exponent_; }

private:
  double exponent_;
};

// The frequency grid does not cover the support [0, 1/h] of the integrand.
class CoverageError : public NumericError {
public:
  CoverageError(double n_eta, double required)
      : NumericError("frequency grid reaches " + std::to_string(n_eta) +
                     " but the integrand is supported up to " + std::to_string(required) +
                     "; enlarge N or eta") {}
};

// Adaptive quadrature hit the recursion cap before reaching the tolerance.
class MaxDepthExceeded : public NumericError {
public:
  explicit MaxDepthExceeded(const std::string& what) : NumericError(what) {}
};

// Requested a kernel moment whose defining integral diverges.
class NonIntegrableMoment : public NumericError {
public:
  explicit NonIntegrableMoment(const std::string& what) : NumericError(what) {}
};

// A model with Var[Y] = 0 has no meaningful noise-to-signal ratio.
class DegenerateModel : public NumericError {
public:
  explicit DegenerateModel(const std::string& what) : NumericError(what) {}
};

// An operation that needs at least one value received none.
class EmptyInput : public std::invalid_argument {
public:
  explicit EmptyInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace atomdeconv
