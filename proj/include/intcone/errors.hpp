#pragma once

#include <stdexcept>
#include <string>

namespace intcone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document or numeral.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A well-formed document whose instance breaks a type invariant.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Desk-scale limits. These signal "too big to check here", never a wrong answer.
class GuardTrip : public Error {
 public:
  using Error::Error;
};

class ExplosionGuard : public GuardTrip {
 public:
  using GuardTrip::GuardTrip;
};

class SupportSearchTooLarge : public GuardTrip {
 public:
  using GuardTrip::GuardTrip;
};

/// Interval propagation left some coordinate unbounded.
class BoxUnderivable : public Error {
 public:
  using Error::Error;
};

class NegativeInput : public Error {
 public:
  using Error::Error;
};

/// A witness handed to a lifting/projection map does not certify its instance.
class CertificateError : public Error {
 public:
  using Error::Error;
};

class PairSumViolation : public Error {
 public:
  using Error::Error;
};

class NegativeSlack : public Error {
 public:
  using Error::Error;
};

}  // namespace intcone
