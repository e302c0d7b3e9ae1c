#pragma once

#include <stdexcept>
#include <string>

namespace hankelray {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// psd_certify input is not equal to its transpose.
struct NotSymmetricError : Error {
  NotSymmetricError() : Error("matrix is not symmetric") {}
};

struct ZeroFunctionalError : Error {
  ZeroFunctionalError() : Error("functional is identically zero") {}
};

// The point evaluations admit no linear relation in the requested degree.
struct NoRelationError : Error {
  using Error::Error;
};

// The relation space has dimension >= 2.
struct RelationNotUniqueError : Error {
  using Error::Error;
};

// The removed point carries coefficient zero in the relation.
struct CoefficientZeroError : Error {
  using Error::Error;
};

// A structured kernel check failed; the message names the offending element.
struct KernelMismatchError : Error {
  using Error::Error;
};

struct DegreeOutOfRangeError : Error {
  using Error::Error;
};

// The perturbation parameter search ran out of candidates.
struct SearchExhaustedError : Error {
  using Error::Error;
};

struct RankOutOfRangeError : Error {
  using Error::Error;
};

}  // namespace hankelray
