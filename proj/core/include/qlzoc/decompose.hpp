#pragma once

#include <vector>

#include "qlzoc/circuit.hpp"
#include "qlzoc/gates.hpp"

namespace qlzoc {

enum class CcxStyle { AmyDepth9, JonesMeasurement };
enum class TandStyle { GidneyTState };
enum class McxStyle { ToffoliLadderWithAncilla };

struct DecompositionPolicy {
    CcxStyle ccx_style = CcxStyle::AmyDepth9;
    TandStyle tand_style = TandStyle::GidneyTState;
    McxStyle mcx_style = McxStyle::ToffoliLadderWithAncilla;
};

/// Toffoli as an exact Clifford+T sequence: 7 T-type gates in 3 T-layers,
/// 9 layers in total.
std::vector<Gate> expand_ccx_amy(QubitId c0, QubitId c1, QubitId t);

/// iX gate: |q0,q1,y> -> i^(q0 q1) |q0,q1, y xor (q0 and q1)>. Four T-type
/// gates, all on the target wire.
std::vector<Gate> expand_ix(QubitId q0, QubitId q1, QubitId y);

/// Temporary logical AND, compute half. The target qubit doubles as the
/// T-state carrier: it enters as |0>, is prepared into |T> in place, and
/// ends holding c0 and c1. Four T-type gates in 2 T-layers.
std::vector<Gate> expand_tand_compute(QubitId c0, QubitId c1, QubitId t);

/// Temporary logical AND, uncompute half: Hadamard, measurement, and a
/// classically controlled CZ phase fix plus a classically controlled X that
/// returns the target to |0>. T-free.
std::vector<Gate> expand_tand_uncompute(QubitId c0, QubitId c1, QubitId t, ClassicalBit bit);

/// Measurement-based Toffoli: iX onto a fresh ancilla, S-dagger phase fix,
/// copy to target, measure the ancilla away. Kept for validation; no
/// generator uses it.
std::vector<Gate> expand_ccx_jones(QubitId c0, QubitId c1, QubitId t, QubitId ancilla,
                                   ClassicalBit bit);

/// Appends a Toffoli-ladder realization of MCX (>= 3 controls) to the
/// builder: partial ANDs into fresh ancillas, one CCX onto the target, then
/// the reversed uncompute. Ladder ancillas are released back to the pool.
void append_mcx_ladder(CircuitBuilder& builder, const std::vector<QubitId>& controls,
                       QubitId target, bool use_tand = false);

enum class ExpandLevel {
    CcxOnly,    // MCX lowered to CCX ladders; T-AND macros kept
    Qasm,       // additionally lowers T-AND to Clifford+T+measurement
    CliffordT,  // additionally lowers CCX per the policy
};

/// Rewrites a circuit to the requested gate level. The registry is
/// preserved; ladder ancillas and measurement bits are added as needed.
Circuit expand_circuit(const Circuit& circuit, const DecompositionPolicy& policy = {},
                       ExpandLevel level = ExpandLevel::CliffordT);

}  // namespace qlzoc
