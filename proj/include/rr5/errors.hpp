#pragma once

#include <stdexcept>
#include <string>

namespace rr5 {

/// Input outside an operation's domain (zero polynomial, Im(tau) <= 0, bad discriminant...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The discriminant fails (-d/5) = +1, or no Heegner parameter exists.
class AdmissibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical work did not reach the requested accuracy; callers may retry at higher precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rounding an analytically expanded polynomial to integers failed the 2^-32 test.
class ReconstructionError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

/// Precision escalation reached the policy ceiling.
class PrecisionExhausted : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

/// An exact certification step (divisibility, symmetry, identity) failed.
class IntegrityError : public std::runtime_error {
 public:
  IntegrityError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace rr5
