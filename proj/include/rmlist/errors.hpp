#pragma once

#include <stdexcept>
#include <string>

namespace rmlist {

/// Base class for all library errors.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class FieldMismatch : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

class NonDivisorDegree : public Error {
   public:
    using Error::Error;
};

class NonIntegerExponent : public Error {
   public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
   public:
    using Error::Error;
};

class DependentBasis : public Error {
   public:
    using Error::Error;
};

class ParamViolation : public Error {
   public:
    using Error::Error;
};

class ZeroScalar : public Error {
   public:
    using Error::Error;
};

class DependentPoints : public Error {
   public:
    using Error::Error;
};

class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

class LengthMismatch : public Error {
   public:
    using Error::Error;
};

class HypothesisViolation : public Error {
   public:
    using Error::Error;
};

class ContainmentFailure : public Error {
   public:
    using Error::Error;
};

class FamilyNotInPol : public Error {
   public:
    using Error::Error;
};

class NegativeRadicand : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class AmbientMismatch : public Error {
   public:
    using Error::Error;
};

}  // namespace rmlist
