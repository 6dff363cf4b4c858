#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tumour {

/// Argument outside the domain of a model function (e.g. α ≤ 0 with a negative exponent).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A formula divides by a parameter combination that vanishes (n = 1, m = n, ...).
class DegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solution family was constructed with parameters violating one of its restrictions.
class RestrictionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at a point where the field is singular (the origin for most families).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InapplicableSymmetryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature ran out of recursion depth. Carries the best available estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

/// Sampling hit singular points; the offending sample indices are reported.
class SingularSampleError : public std::domain_error {
 public:
  SingularSampleError(const std::string& what, std::vector<std::size_t> indices)
      : std::domain_error(what), indices_(std::move(indices)) {}
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace tumour
