#pragma once

#include <stdexcept>
#include <string>

namespace kitaev {

// Domain-level failures. Everything here derives from DomainError so callers
// (and the CLI exit-code mapping) can distinguish them from usage mistakes.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when two quasiparticle levels coincide to machine precision; excited
// states of an exactly degenerate quadratic Hamiltonian have no canonical
// Gaussian labeling.
class DegenerateHamiltonian : public DomainError {
public:
    explicit DegenerateHamiltonian(const std::string& msg) : DomainError(msg) {}
};

// Raised by observable constructors/evaluators fed a non-Hermitian operator.
class NonHermitianObservable : public DomainError {
public:
    explicit NonHermitianObservable(const std::string& msg) : DomainError(msg) {}
};

// Raised by the winding-number integrator when the phase vector passes
// through the origin (parameters sit on a phase boundary).
class BoundaryPoint : public DomainError {
public:
    explicit BoundaryPoint(const std::string& msg) : DomainError(msg) {}
};

// Raised when a dense diagonalization would exceed the configured qubit cap.
class DimensionCapExceeded : public DomainError {
public:
    explicit DimensionCapExceeded(const std::string& msg) : DomainError(msg) {}
};

// Raised when a quadratic-only routine meets a cubic-or-higher term.
class NonQuadraticTerm : public DomainError {
public:
    explicit NonQuadraticTerm(const std::string& msg) : DomainError(msg) {}
};

}  // namespace kitaev
