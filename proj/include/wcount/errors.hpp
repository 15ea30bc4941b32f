#pragma once

#include <stdexcept>
#include <string>

namespace wcount {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class PreconditionViolated : public Error {
  public:
    using Error::Error;
};

class OutOfRange : public PreconditionViolated {
  public:
    using PreconditionViolated::PreconditionViolated;
};

class RankDeficient : public PreconditionViolated {
  public:
    using PreconditionViolated::PreconditionViolated;
};

class DomainError : public PreconditionViolated {
  public:
    using PreconditionViolated::PreconditionViolated;
};

class Infeasible : public Error {
  public:
    using Error::Error;
};

class NoRoot : public Error {
  public:
    using Error::Error;
};

/// An operation refused to run because its work estimate exceeds the configured budget.
class ResourceLimit : public Error {
  public:
    using Error::Error;
};

}  // namespace wcount
