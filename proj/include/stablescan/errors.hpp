// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stablescan {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two points (or a point and a set/space) disagree on dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A radius too small to produce a representable neighbor of the center.
class DegenerateRadiusError : public Error {
 public:
  using Error::Error;
};

/// An argument outside its documented domain (non-finite, non-positive, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A point that belongs to no classification set.
class UndefinedPointError : public Error {
 public:
  using Error::Error;
};

/// A point that belongs to two or more classification sets.
class PartitionViolationError : public Error {
 public:
  using Error::Error;
};

/// A scenario does not satisfy the preconditions of the requested analysis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A probe outside the finite support handed to the exhaustive oracle.
class InvalidProbeError : public Error {
 public:
  using Error::Error;
};

/// Scenario file rejected; carries one message per offending location.
class SchemaError : public Error {
 public:
  explicit SchemaError(std::vector<std::string> issues)
      : Error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "invalid scenario";
    for (const auto& i : issues) {
      out += "\n  - " + i;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

/// An induced classifier failed its own axioms; aborts the run.
class AxiomViolationError : public Error {
 public:
  using Error::Error;
};

/// Failure to spawn or talk to an external classifier process.
class SubprocessError : public Error {
 public:
  using Error::Error;
};

}  // namespace stablescan
