#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcinv {

// Argument outside the mathematical domain of an operation (odd dimension,
// negative binomial top, p + q != n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operand sizes that do not fit together.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Division by a ring element whose constant part vanishes.
class SingularPointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MetricViolation {
  kShape,
  kAsymmetric,
  kNotPositiveDefinite,
  kNotJInvariant,
};

const char* to_string(MetricViolation violation);

class MetricError : public DomainError {
 public:
  MetricError(MetricViolation violation, const std::string& what)
      : DomainError(what), violation_(violation) {}

  MetricViolation violation() const noexcept { return violation_; }

 private:
  MetricViolation violation_;
};

// A quadrature integrand returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(std::size_t node_index, const std::string& what)
      : std::runtime_error(what), node_index_(node_index) {}

  std::size_t node_index() const noexcept { return node_index_; }

 private:
  std::size_t node_index_;
};

}  // namespace dcinv
