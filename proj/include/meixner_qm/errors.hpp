#pragma once

#include <stdexcept>
#include <string>

namespace meixner_qm {

// Argument outside the mathematical domain of an operation (nonpositive
// Pochhammer base, coordinate outside a basis domain, index out of range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Matrix or grid sizes that are too small or do not match.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Physical parameter constraint violated (e.g. V0 below the Gegenbauer bound).
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation at a point where a fixed potential term diverges.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computed value failed its accuracy guard.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quadrature oracle was asked for an integral it cannot evaluate.
class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meixner_qm
