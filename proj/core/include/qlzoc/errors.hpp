#pragma once

#include <stdexcept>
#include <string>

namespace qlzoc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Register width zero or otherwise unusable.
struct InvalidWidthError : Error {
    using Error::Error;
};

// A gate references an unregistered qubit, or the registry is inconsistent.
struct RegistryError : Error {
    using Error::Error;
};

// A gate violates its arity/distinctness invariants.
struct MalformedGateError : Error {
    using Error::Error;
};

// Ancilla pool misuse (double release, release of a foreign qubit, ...).
struct AllocationError : Error {
    using Error::Error;
};

// A design was requested at a width its construction does not support.
struct ShapeError : Error {
    using Error::Error;
};

// An i-MCXn variant was requested with inconsistent parameters.
struct VariantMismatchError : Error {
    using Error::Error;
};

// Macro gates fed to an analysis/simulation stage that needs expanded
// circuits, or Clifford+T gates fed to the macro-level bit simulator.
struct WrongLevelError : Error {
    using Error::Error;
};

// Statevector width limit exceeded.
struct CapacityError : Error {
    using Error::Error;
};

// Argument outside a function's mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// Ancilla classification requested without simulation evidence.
struct EvidenceError : Error {
    using Error::Error;
};

// Malformed circuit interchange or qasm text.
struct FormatError : Error {
    using Error::Error;
};

}  // namespace qlzoc
