#pragma once

#include <Eigen/Core>

#include "irrstrat/exactnum/gaussian.hpp"
#include "irrstrat/exactnum/rational.hpp"

// Exact scalars are opaque to Eigen: no vectorization, no tolerance-based
// algorithms. Only storage, arithmetic expressions and products are used.
namespace Eigen {

template <>
struct NumTraits<irrstrat::Rational> : GenericNumTraits<irrstrat::Rational> {
  using Real = irrstrat::Rational;
  using NonInteger = irrstrat::Rational;
  using Nested = irrstrat::Rational;
  using Literal = irrstrat::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

template <>
struct NumTraits<irrstrat::GaussianRational> : GenericNumTraits<irrstrat::GaussianRational> {
  using Real = irrstrat::GaussianRational;
  using NonInteger = irrstrat::GaussianRational;
  using Nested = irrstrat::GaussianRational;
  using Literal = irrstrat::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
