#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlzoc/errors.hpp"

namespace qlzoc {

using QubitId = std::uint32_t;

// Index into the circuit's classical register; -1 means "no classical bit".
using ClassicalBit = std::int32_t;

enum class GateKind {
    X,
    H,
    S,
    Sdg,
    T,
    Tdg,
    CX,
    CZ,
    CCX,
    MCX,
    TAndCompute,
    TAndUncompute,
    Measure,    // computational-basis measurement into a classical bit
    CzIf,       // CZ applied when a classical bit is 1
    XIf,        // X applied when a classical bit is 1
};

const char* gate_kind_name(GateKind kind);

/// One circuit instruction. Controls and targets are disjoint qubit lists;
/// `cbit` is set for Measure/CzIf/XIf only.
struct Gate {
    GateKind kind;
    std::vector<QubitId> controls;
    std::vector<QubitId> targets;
    ClassicalBit cbit = -1;

    static Gate x(QubitId t) { return {GateKind::X, {}, {t}}; }
    static Gate h(QubitId t) { return {GateKind::H, {}, {t}}; }
    static Gate s(QubitId t) { return {GateKind::S, {}, {t}}; }
    static Gate sdg(QubitId t) { return {GateKind::Sdg, {}, {t}}; }
    static Gate t_gate(QubitId t) { return {GateKind::T, {}, {t}}; }
    static Gate tdg(QubitId t) { return {GateKind::Tdg, {}, {t}}; }
    static Gate cx(QubitId c, QubitId t) { return {GateKind::CX, {c}, {t}}; }
    static Gate cz(QubitId a, QubitId b) { return {GateKind::CZ, {}, {a, b}}; }
    static Gate ccx(QubitId c0, QubitId c1, QubitId t) { return {GateKind::CCX, {c0, c1}, {t}}; }
    static Gate mcx(std::vector<QubitId> cs, QubitId t);
    static Gate tand_compute(QubitId c0, QubitId c1, QubitId t) {
        return {GateKind::TAndCompute, {c0, c1}, {t}};
    }
    static Gate tand_uncompute(QubitId c0, QubitId c1, QubitId t) {
        return {GateKind::TAndUncompute, {c0, c1}, {t}};
    }
    static Gate measure(QubitId t, ClassicalBit b) { return {GateKind::Measure, {}, {t}, b}; }
    static Gate cz_if(ClassicalBit b, QubitId a, QubitId q) { return {GateKind::CzIf, {}, {a, q}, b}; }
    static Gate x_if(ClassicalBit b, QubitId t) { return {GateKind::XIf, {}, {t}, b}; }

    bool is_t_type() const { return kind == GateKind::T || kind == GateKind::Tdg; }

    std::vector<QubitId> qubits() const;

    bool operator==(const Gate& other) const = default;
};

/// Throws MalformedGateError unless the gate satisfies its arity rules and
/// lists no qubit twice.
void validate_gate_shape(const Gate& gate);

}  // namespace qlzoc
