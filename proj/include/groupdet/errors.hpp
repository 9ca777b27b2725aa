#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace groupdet {

// Base class for every error raised by the library. The CLI maps these to
// exit code 2 (configuration error) unless noted otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedTable : public Error {
 public:
  using Error::Error;
};

// One of the group axioms failed. `witness` holds the offending element
// indices (unused slots are -1).
class NotAGroup : public Error {
 public:
  NotAGroup(std::string axiom, std::array<int, 3> witness, const std::string& message)
      : Error(message), axiom_(std::move(axiom)), witness_(witness) {}

  const std::string& axiom() const { return axiom_; }
  const std::array<int, 3>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::array<int, 3> witness_;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotASubgroupChain : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotAbelian : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

class GroupTooLargeForSymbolic : public Error {
 public:
  using Error::Error;
};

// Eigenvalue clustering stayed ambiguous after every retry. Not a
// configuration error: the CLI reports it with exit code 1.
class DecompositionFailed : public Error {
 public:
  using Error::Error;
};

class IncompleteIrrepSet : public Error {
 public:
  using Error::Error;
};

// A complex coefficient in symbolic mode was not within the rounding window
// of a Gaussian integer.
class RoundingAmbiguous : public Error {
 public:
  using Error::Error;
};

}  // namespace groupdet
