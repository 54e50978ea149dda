#pragma once

#include <stdexcept>
#include <string>

namespace fano10 {

/// Base for failures that are specific to the geometric constructions. Plain
/// argument and domain errors use std::invalid_argument / std::domain_error.
class Fano10Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSpanError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class DegeneratePencilError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class DegenerateNetError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class InvalidElementError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class ClosureViolationError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class NotAFlopError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class BasisError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class SplitError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class MultiplicityError : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class UnsupportedOperation : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};
class VerificationFailure : public Fano10Error {
 public:
  using Fano10Error::Fano10Error;
};

}  // namespace fano10
