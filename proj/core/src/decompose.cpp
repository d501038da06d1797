#include "qlzoc/decompose.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>

namespace qlzoc {

namespace {

void require_distinct(std::initializer_list<QubitId> qs) {
    std::vector<QubitId> v(qs);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
        throw MalformedGateError("decomposition requires distinct qubits");
    }
}

}  // namespace

std::vector<Gate> expand_ccx_amy(QubitId a, QubitId b, QubitId t) {
    require_distinct({a, b, t});
    // CCZ phase polynomial a+b+t-(a^b)-(a^t)-(b^t)+(a^b^t) in eighth turns,
    // scheduled in 3 T-layers over 9 total layers, conjugated by H on t.
    return {
        Gate::h(t),
        Gate::t_gate(a),
        Gate::t_gate(b),
        Gate::t_gate(t),
        Gate::cx(a, b),
        Gate::tdg(b),
        Gate::cx(t, a),
        Gate::tdg(a),
        Gate::cx(b, t),
        Gate::t_gate(t),
        Gate::cx(a, b),
        Gate::cx(b, a),
        Gate::tdg(b),
        Gate::cx(a, t),
        Gate::cx(t, b),
        Gate::cx(b, a),
        Gate::h(t),
    };
}

std::vector<Gate> expand_ix(QubitId q0, QubitId q1, QubitId y) {
    require_distinct({q0, q1, y});
    // H . diag(omega^(2 q0 q1 + 4 q0 q1 z)) . H on y, with the phase terms
    // -z +(q0^z) -(q0^q1^z) +(q1^z) walked along the target wire.
    return {
        Gate::h(y),
        Gate::tdg(y),
        Gate::cx(q0, y),
        Gate::t_gate(y),
        Gate::cx(q1, y),
        Gate::tdg(y),
        Gate::cx(q0, y),
        Gate::t_gate(y),
        Gate::cx(q1, y),
        Gate::h(y),
    };
}

std::vector<Gate> expand_tand_compute(QubitId c0, QubitId c1, QubitId t) {
    require_distinct({c0, c1, t});
    return {
        // |0> -> |T> preparation on the target itself.
        Gate::h(t),
        Gate::t_gate(t),
        Gate::cx(c0, t),
        Gate::cx(c1, t),
        Gate::cx(t, c0),
        Gate::cx(t, c1),
        Gate::tdg(c0),
        Gate::tdg(c1),
        Gate::t_gate(t),
        Gate::cx(t, c0),
        Gate::cx(t, c1),
        Gate::h(t),
        Gate::s(t),
    };
}

std::vector<Gate> expand_tand_uncompute(QubitId c0, QubitId c1, QubitId t, ClassicalBit bit) {
    require_distinct({c0, c1, t});
    return {
        Gate::h(t),
        Gate::measure(t, bit),
        Gate::cz_if(bit, c0, c1),
        Gate::x_if(bit, t),
    };
}

std::vector<Gate> expand_ccx_jones(QubitId c0, QubitId c1, QubitId t, QubitId ancilla,
                                   ClassicalBit bit) {
    require_distinct({c0, c1, t, ancilla});
    std::vector<Gate> gates = expand_ix(c0, c1, ancilla);
    gates.push_back(Gate::sdg(ancilla));
    gates.push_back(Gate::cx(ancilla, t));
    gates.push_back(Gate::h(ancilla));
    gates.push_back(Gate::measure(ancilla, bit));
    gates.push_back(Gate::cz_if(bit, c0, c1));
    gates.push_back(Gate::x_if(bit, ancilla));
    return gates;
}

namespace {

// Shared ladder shape between the builder API and the expansion pass.
void emit_ladder(const std::vector<QubitId>& controls, QubitId target, bool use_tand,
                 const std::function<QubitId()>& alloc, const std::function<void(QubitId)>& release,
                 const std::function<void(Gate)>& emit) {
    if (controls.size() < 3) {
        throw MalformedGateError("MCX ladder expects at least 3 controls");
    }
    std::vector<QubitId> partial;
    QubitId acc = controls[0];
    for (std::size_t k = 1; k + 1 < controls.size(); ++k) {
        QubitId anc = alloc();
        partial.push_back(anc);
        emit(use_tand ? Gate::tand_compute(controls[k], acc, anc)
                      : Gate::ccx(controls[k], acc, anc));
        acc = anc;
    }
    emit(Gate::ccx(controls.back(), acc, target));
    for (std::size_t k = partial.size(); k-- > 0;) {
        QubitId anc = partial[k];
        QubitId prev = k == 0 ? controls[0] : partial[k - 1];
        emit(use_tand ? Gate::tand_uncompute(controls[k + 1], prev, anc)
                      : Gate::ccx(controls[k + 1], prev, anc));
        release(anc);
    }
}

}  // namespace

void append_mcx_ladder(CircuitBuilder& builder, const std::vector<QubitId>& controls,
                       QubitId target, bool use_tand) {
    emit_ladder(
        controls, target, use_tand,
        [&] { return builder.alloc_ancilla(RegisterRole::AncillaReusable); },
        [&](QubitId q) { builder.release_ancilla(q); },
        [&](Gate g) { builder.append(std::move(g)); });
}

Circuit expand_circuit(const Circuit& circuit, const DecompositionPolicy& policy,
                       ExpandLevel level) {
    std::vector<RegisterRole> roles(circuit.qubit_count());
    for (QubitId q = 0; q < circuit.qubit_count(); ++q) roles[q] = circuit.role_of(q);
    std::vector<Gate> out;
    std::uint32_t cbits = circuit.classical_bit_count();
    std::vector<QubitId> pool;

    auto alloc = [&]() -> QubitId {
        if (!pool.empty()) {
            QubitId q = pool.back();
            pool.pop_back();
            return q;
        }
        roles.push_back(RegisterRole::AncillaReusable);
        return static_cast<QubitId>(roles.size() - 1);
    };
    auto release = [&](QubitId q) { pool.push_back(q); };
    auto emit = [&](Gate g) { out.push_back(std::move(g)); };

    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::MCX:
                if (g.controls.size() <= 2) {
                    emit(Gate::mcx(g.controls, g.targets[0]));
                    break;
                }
                emit_ladder(g.controls, g.targets[0], false, alloc, release, emit);
                break;
            case GateKind::CCX:
                if (level == ExpandLevel::CliffordT) {
                    if (policy.ccx_style == CcxStyle::AmyDepth9) {
                        for (auto& e : expand_ccx_amy(g.controls[0], g.controls[1], g.targets[0])) {
                            emit(std::move(e));
                        }
                    } else {
                        QubitId anc = alloc();
                        auto bit = static_cast<ClassicalBit>(cbits++);
                        for (auto& e : expand_ccx_jones(g.controls[0], g.controls[1], g.targets[0],
                                                        anc, bit)) {
                            emit(std::move(e));
                        }
                        release(anc);
                    }
                } else {
                    emit(g);
                }
                break;
            case GateKind::TAndCompute:
                if (level == ExpandLevel::CcxOnly) {
                    emit(g);
                } else {
                    for (auto& e : expand_tand_compute(g.controls[0], g.controls[1], g.targets[0])) {
                        emit(std::move(e));
                    }
                }
                break;
            case GateKind::TAndUncompute:
                if (level == ExpandLevel::CcxOnly) {
                    emit(g);
                } else {
                    auto bit = static_cast<ClassicalBit>(cbits++);
                    for (auto& e : expand_tand_uncompute(g.controls[0], g.controls[1], g.targets[0],
                                                         bit)) {
                        emit(std::move(e));
                    }
                }
                break;
            default:
                emit(g);
                break;
        }
    }

    return Circuit::from_parts(circuit.name(), circuit.input_width(), circuit.mode(),
                               std::move(roles), circuit.input_msb_first(),
                               circuit.output_msb_first(), circuit.mode_qubit(), cbits,
                               std::move(out));
}

}  // namespace qlzoc
