#pragma once

#include <stdexcept>
#include <string>

namespace gcx {

// Exit codes form a stable contract for the command-line tool:
//   0 success, 1 parse/validation, 2 algebraic rejection,
//   3 integrability rejection, 4 construction failure.
enum class ExitCode : int {
  Ok = 0,
  Validation = 1,
  Algebraic = 2,
  Integrability = 3,
  Construction = 4,
};

class Error : public std::runtime_error {
public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

private:
  ExitCode code_;
};

// Document did not parse or failed schema validation.
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(ExitCode::Validation, what) {}
};

// Input violates an algebraic precondition (Jacobi, purity, nondegeneracy, ...).
class AlgebraicError : public Error {
public:
  explicit AlgebraicError(const std::string& what) : Error(ExitCode::Algebraic, what) {}
};

class JacobiError : public AlgebraicError {
public:
  explicit JacobiError(const std::string& what) : AlgebraicError(what) {}
};

// The spinor is not pure (annihilator rank below half the double dimension).
class NonPureError : public AlgebraicError {
public:
  explicit NonPureError(const std::string& what) : AlgebraicError(what) {}
};

// The spinor is pure but L meets its conjugate: no almost structure.
class DegenerateError : public AlgebraicError {
public:
  explicit DegenerateError(const std::string& what) : AlgebraicError(what) {}
};

// Fibration data whose 2-form is degenerate on the fibers.
class DegenerateFiberForm : public AlgebraicError {
public:
  explicit DegenerateFiberForm(const std::string& what) : AlgebraicError(what) {}
};

// No modular field: the structure is not integrable.
class NotIntegrableError : public Error {
public:
  explicit NotIntegrableError(const std::string& what) : Error(ExitCode::Integrability, what) {}
};

class ConstructionError : public Error {
public:
  explicit ConstructionError(const std::string& what) : Error(ExitCode::Construction, what) {}
};

// The invariant connection equation has no solution.
class UnsolvableError : public ConstructionError {
public:
  explicit UnsolvableError(const std::string& what) : ConstructionError(what) {}
};

// A re-check of a constructed object failed; indicates an internal bug.
class VerificationFailure : public ConstructionError {
public:
  explicit VerificationFailure(const std::string& what) : ConstructionError(what) {}
};

class InvolutivityFailure : public ConstructionError {
public:
  explicit InvolutivityFailure(const std::string& what) : ConstructionError(what) {}
};

class FactorizationInconsistent : public ConstructionError {
public:
  explicit FactorizationInconsistent(const std::string& what) : ConstructionError(what) {}
};

// The differential does not preserve the ideal: corrupted input.
class StabilityFailure : public ConstructionError {
public:
  explicit StabilityFailure(const std::string& what) : ConstructionError(what) {}
};

}  // namespace gcx
