#include "qlzoc/circuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace qlzoc {

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "SDG";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "TDG";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
        case GateKind::CCX: return "CCX";
        case GateKind::MCX: return "MCX";
        case GateKind::TAndCompute: return "TANDC";
        case GateKind::TAndUncompute: return "TANDU";
        case GateKind::Measure: return "MEASURE";
        case GateKind::CzIf: return "CZIF";
        case GateKind::XIf: return "XIF";
    }
    return "?";
}

const char* register_role_name(RegisterRole role) {
    switch (role) {
        case RegisterRole::Input: return "input";
        case RegisterRole::Output: return "output";
        case RegisterRole::Mode: return "mode";
        case RegisterRole::AncillaReusable: return "ancilla-reusable";
        case RegisterRole::AncillaGarbage: return "ancilla-garbage";
        case RegisterRole::TStateResource: return "t-state";
    }
    return "?";
}

const char* count_mode_name(CountMode mode) {
    switch (mode) {
        case CountMode::Loc: return "loc";
        case CountMode::Lzc: return "lzc";
        case CountMode::Reconfigurable: return "reconfigurable";
    }
    return "?";
}

Gate Gate::mcx(std::vector<QubitId> cs, QubitId t) {
    if (cs.empty()) throw MalformedGateError("MCX requires at least one control");
    if (cs.size() == 1) return cx(cs[0], t);
    if (cs.size() == 2) return ccx(cs[0], cs[1], t);
    return {GateKind::MCX, std::move(cs), {t}};
}

std::vector<QubitId> Gate::qubits() const {
    std::vector<QubitId> qs = controls;
    qs.insert(qs.end(), targets.begin(), targets.end());
    return qs;
}

void validate_gate_shape(const Gate& gate) {
    const auto nc = gate.controls.size();
    const auto nt = gate.targets.size();
    auto want = [&](bool ok) {
        if (!ok) {
            throw MalformedGateError(std::string("bad arity for ") + gate_kind_name(gate.kind));
        }
    };
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg: want(nc == 0 && nt == 1); break;
        case GateKind::CX: want(nc == 1 && nt == 1); break;
        case GateKind::CZ: want(nc == 0 && nt == 2); break;
        case GateKind::CCX: want(nc == 2 && nt == 1); break;
        case GateKind::MCX: want(nc >= 1 && nt == 1); break;
        case GateKind::TAndCompute:
        case GateKind::TAndUncompute: want(nc == 2 && nt == 1); break;
        case GateKind::Measure: want(nc == 0 && nt == 1 && gate.cbit >= 0); break;
        case GateKind::CzIf: want(nc == 0 && nt == 2 && gate.cbit >= 0); break;
        case GateKind::XIf: want(nc == 0 && nt == 1 && gate.cbit >= 0); break;
    }
    auto qs = gate.qubits();
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
        throw MalformedGateError(std::string(gate_kind_name(gate.kind)) +
                                 " lists the same qubit more than once");
    }
}

RegisterRole Circuit::role_of(QubitId q) const {
    if (q >= roles_.size()) throw RegistryError("qubit id out of range");
    return roles_[q];
}

std::vector<QubitId> Circuit::qubits_with_role(RegisterRole role) const {
    std::vector<QubitId> out;
    for (QubitId q = 0; q < roles_.size(); ++q) {
        if (roles_[q] == role) out.push_back(q);
    }
    return out;
}

std::uint32_t Circuit::count_role(RegisterRole role) const {
    std::uint32_t n = 0;
    for (auto r : roles_) {
        if (r == role) ++n;
    }
    return n;
}

std::uint32_t output_width_for(std::uint32_t m) {
    if (m == 0) throw InvalidWidthError("counter width must be positive");
    return static_cast<std::uint32_t>(std::bit_width(m));  // floor(lg m) + 1
}

CircuitBuilder::CircuitBuilder(std::string name, std::uint32_t m, CountMode mode)
    : name_(std::move(name)), m_(m), mode_(mode) {
    const auto out_w = output_width_for(m);  // throws on m == 0
    input_.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) new_qubit(RegisterRole::Input);
    // Registry stores MSB first; ids run LSB..MSB in allocation order.
    for (std::uint32_t i = 0; i < m; ++i) input_.push_back(m - 1 - i);
    for (std::uint32_t i = 0; i < out_w; ++i) new_qubit(RegisterRole::Output);
    for (std::uint32_t i = 0; i < out_w; ++i) output_.push_back(m + out_w - 1 - i);
}

QubitId CircuitBuilder::new_qubit(RegisterRole role) {
    roles_.push_back(role);
    allocated_.push_back(true);
    return static_cast<QubitId>(roles_.size() - 1);
}

QubitId CircuitBuilder::input(std::uint32_t bit) const {
    if (bit >= m_) throw RegistryError("input bit index out of range");
    return input_[m_ - 1 - bit];
}

QubitId CircuitBuilder::output(std::uint32_t bit) const {
    if (bit >= output_.size()) throw RegistryError("output bit index out of range");
    return output_[output_.size() - 1 - bit];
}

QubitId CircuitBuilder::add_mode_qubit() {
    if (mode_qubit_) throw RegistryError("mode qubit already registered");
    mode_qubit_ = new_qubit(RegisterRole::Mode);
    return *mode_qubit_;
}

QubitId CircuitBuilder::alloc_ancilla(RegisterRole role) {
    if (role != RegisterRole::AncillaReusable && role != RegisterRole::AncillaGarbage &&
        role != RegisterRole::TStateResource) {
        throw AllocationError("alloc_ancilla takes an ancilla role");
    }
    if (role == RegisterRole::AncillaReusable && !reusable_pool_.empty()) {
        QubitId q = reusable_pool_.back();
        reusable_pool_.pop_back();
        allocated_[q] = true;
        return q;
    }
    return new_qubit(role);
}

void CircuitBuilder::release_ancilla(QubitId q) {
    if (q >= roles_.size() || !allocated_[q]) {
        throw AllocationError("release of a qubit that is not allocated");
    }
    if (roles_[q] != RegisterRole::AncillaReusable) {
        throw AllocationError("only reusable ancillas can be released");
    }
    allocated_[q] = false;
    reusable_pool_.push_back(q);
}

ClassicalBit CircuitBuilder::alloc_classical_bit() {
    return static_cast<ClassicalBit>(cbits_++);
}

void CircuitBuilder::append(Gate gate) {
    if (finished_) throw Error("builder already finished");
    validate_gate_shape(gate);
    for (QubitId q : gate.qubits()) {
        if (q >= roles_.size()) throw RegistryError("gate references an unregistered qubit");
    }
    if (gate.cbit >= 0 && static_cast<std::uint32_t>(gate.cbit) >= cbits_) {
        throw RegistryError("gate references an unallocated classical bit");
    }
    if (gate.kind == GateKind::TAndCompute) {
        const auto role = roles_[gate.targets[0]];
        if (role == RegisterRole::Input || role == RegisterRole::Mode) {
            throw MalformedGateError("T-AND target must be a zero-initialized non-input qubit");
        }
    }
    gates_.push_back(std::move(gate));
}

void CircuitBuilder::set_role(QubitId q, RegisterRole role) {
    if (q >= roles_.size()) throw RegistryError("qubit id out of range");
    if (roles_[q] == RegisterRole::Input || roles_[q] == RegisterRole::Mode) {
        throw RegistryError("input/mode qubits cannot be re-labeled");
    }
    roles_[q] = role;
}

Circuit CircuitBuilder::finish() {
    if (finished_) throw Error("builder already finished");
    finished_ = true;
    Circuit c;
    c.name_ = std::move(name_);
    c.m_ = m_;
    c.mode_ = mode_;
    c.gates_ = std::move(gates_);
    c.roles_ = std::move(roles_);
    c.input_ = std::move(input_);
    c.output_ = std::move(output_);
    c.mode_qubit_ = mode_qubit_;
    c.cbits_ = cbits_;
    validate_circuit(c);
    return c;
}

Circuit Circuit::from_parts(std::string name, std::uint32_t m, CountMode mode,
                            std::vector<RegisterRole> roles, std::vector<QubitId> input_msb,
                            std::vector<QubitId> output_msb, std::optional<QubitId> mode_qubit,
                            std::uint32_t classical_bits, std::vector<Gate> gates) {
    Circuit c;
    c.name_ = std::move(name);
    c.m_ = m;
    c.mode_ = mode;
    c.roles_ = std::move(roles);
    c.input_ = std::move(input_msb);
    c.output_ = std::move(output_msb);
    c.mode_qubit_ = mode_qubit;
    c.cbits_ = classical_bits;
    c.gates_ = std::move(gates);
    if (c.input_.size() != m) throw RegistryError("input register does not match width m");
    for (QubitId q : c.input_) {
        if (q >= c.roles_.size() || c.roles_[q] != RegisterRole::Input) {
            throw RegistryError("input register lists a non-input qubit");
        }
    }
    for (QubitId q : c.output_) {
        if (q >= c.roles_.size() || c.roles_[q] != RegisterRole::Output) {
            throw RegistryError("output register lists a non-output qubit");
        }
    }
    validate_circuit(c);
    return c;
}

void validate_circuit(const Circuit& circuit) {
    // One open compute per target; paired strictly compute-then-uncompute.
    std::map<QubitId, int> open_tand;
    for (const Gate& g : circuit.gates()) {
        validate_gate_shape(g);
        for (QubitId q : g.qubits()) {
            if (q >= circuit.qubit_count()) {
                throw RegistryError("gate references an unregistered qubit");
            }
        }
        if (g.kind == GateKind::TAndCompute) {
            if (open_tand[g.targets[0]] != 0) {
                throw MalformedGateError("nested T-AND compute on one target");
            }
            open_tand[g.targets[0]] = 1;
        } else if (g.kind == GateKind::TAndUncompute) {
            if (open_tand[g.targets[0]] != 1) {
                throw MalformedGateError("T-AND uncompute without matching compute");
            }
            open_tand[g.targets[0]] = 0;
        }
    }
    for (const auto& [q, open] : open_tand) {
        if (open == 0) continue;
        const auto role = circuit.role_of(q);
        // Output-carrying targets (the merge circuit's top flag and merged-away
        // sub-counter flags) legitimately stay computed.
        if (role != RegisterRole::Output && role != RegisterRole::AncillaGarbage) {
            throw MalformedGateError("T-AND compute left unmatched on a reusable ancilla");
        }
    }
}

}  // namespace qlzoc
