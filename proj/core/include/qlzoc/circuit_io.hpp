#pragma once

#include <string>

#include "qlzoc/circuit.hpp"
#include "qlzoc/decompose.hpp"

namespace qlzoc {

/// Canonical line-oriented interchange: header lines declaring registers,
/// then one gate per line (`KIND c:<ids> t:<ids>`). Deterministic: equal
/// circuits serialize to byte-identical text.
std::string serialize_circuit(const Circuit& circuit);

/// Inverse of serialize_circuit. Throws FormatError on malformed text.
Circuit parse_circuit(const std::string& text);

/// Standard textual quantum-assembly dialect. T-AND macros and wide MCX
/// gates are expanded first (the dialect has no primitives for them);
/// register roles ride along in structured comments so parsing recovers the
/// full registry.
std::string emit_qasm(const Circuit& circuit, const DecompositionPolicy& policy = {});

/// Parses the subset of the dialect emitted by emit_qasm.
Circuit parse_qasm(const std::string& text);

}  // namespace qlzoc
