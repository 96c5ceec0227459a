// Copyright 2026 the mvcrypt authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvcrypt {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated an operation's contract.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Structured input text did not match the expected schema. `path` names
/// the offending field, e.g. "modulos[2]".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A discrete-log solver could not produce an answer.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// The solver hit its iteration budget. Carries the work done so far.
class SolverBudgetError : public SolverError {
 public:
  SolverBudgetError(const std::string& what, std::uint64_t iterations)
      : SolverError(what), iterations_(iterations) {}
  std::uint64_t iterations() const { return iterations_; }

 private:
  std::uint64_t iterations_;
};

/// The requested attack does not apply to the given parameters.
class AttackInapplicableError : public Error {
 public:
  using Error::Error;
};

/// Two-candidate decoding cannot tell the candidates apart.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

/// Ciphertext or ledger data is inconsistent with honest encryption.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// Bundled fixture data failed its integrity check.
class FixtureError : public Error {
 public:
  using Error::Error;
};

/// A state the code verified impossible was reached; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvcrypt
