#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlzoc/gates.hpp"

namespace qlzoc {

enum class RegisterRole {
    Input,
    Output,
    Mode,
    AncillaReusable,
    AncillaGarbage,
    TStateResource,
};

const char* register_role_name(RegisterRole role);

/// Whether the counter complements its input, leaves it as-is, or is
/// toggled at runtime by a mode qubit.
enum class CountMode { Loc, Lzc, Reconfigurable };

const char* count_mode_name(CountMode mode);

/// Immutable gate sequence plus qubit registry. Built once through
/// CircuitBuilder; safe to share across threads afterwards.
class Circuit {
public:
    const std::string& name() const { return name_; }
    std::uint32_t input_width() const { return m_; }
    CountMode mode() const { return mode_; }

    std::uint32_t qubit_count() const { return static_cast<std::uint32_t>(roles_.size()); }
    std::uint32_t classical_bit_count() const { return cbits_; }

    const std::vector<Gate>& gates() const { return gates_; }

    // Register views, MSB first.
    const std::vector<QubitId>& input_msb_first() const { return input_; }
    const std::vector<QubitId>& output_msb_first() const { return output_; }
    std::optional<QubitId> mode_qubit() const { return mode_qubit_; }

    RegisterRole role_of(QubitId q) const;
    std::vector<QubitId> qubits_with_role(RegisterRole role) const;
    std::uint32_t count_role(RegisterRole role) const;

    std::uint32_t output_width() const { return static_cast<std::uint32_t>(output_.size()); }

    /// Reassembles a circuit from its serialized parts; validates before
    /// returning. Used by deserialization and expansion passes.
    static Circuit from_parts(std::string name, std::uint32_t m, CountMode mode,
                              std::vector<RegisterRole> roles, std::vector<QubitId> input_msb,
                              std::vector<QubitId> output_msb, std::optional<QubitId> mode_qubit,
                              std::uint32_t classical_bits, std::vector<Gate> gates);

private:
    friend class CircuitBuilder;
    Circuit() = default;

    std::string name_;
    std::uint32_t m_ = 0;
    CountMode mode_ = CountMode::Lzc;
    std::vector<Gate> gates_;
    std::vector<RegisterRole> roles_;
    std::vector<QubitId> input_;   // MSB first
    std::vector<QubitId> output_;  // MSB first
    std::optional<QubitId> mode_qubit_;
    std::uint32_t cbits_ = 0;
};

/// Output register width for an m-qubit counter: floor(lg m) + 1.
std::uint32_t output_width_for(std::uint32_t m);

/// Single-owner builder. Pre-registers the input register (m qubits) and the
/// output register (floor(lg m)+1 qubits); further qubits come from
/// alloc_ancilla / add_mode_qubit. Reusable ancillas released back to the
/// pool are re-issued LIFO; T-state qubits are never re-pooled.
class CircuitBuilder {
public:
    CircuitBuilder(std::string name, std::uint32_t m, CountMode mode = CountMode::Lzc);

    std::uint32_t input_width() const { return m_; }
    std::uint32_t output_width() const { return static_cast<std::uint32_t>(output_.size()); }

    /// Input qubit holding bit `bit` (LSB = 0).
    QubitId input(std::uint32_t bit) const;
    /// Output qubit holding bit `bit` (LSB = 0).
    QubitId output(std::uint32_t bit) const;

    const std::vector<QubitId>& input_msb_first() const { return input_; }
    const std::vector<QubitId>& output_msb_first() const { return output_; }

    QubitId add_mode_qubit();
    std::optional<QubitId> mode_qubit() const { return mode_qubit_; }

    QubitId alloc_ancilla(RegisterRole role);
    void release_ancilla(QubitId q);

    ClassicalBit alloc_classical_bit();

    void append(Gate gate);

    /// Re-label a qubit's final role (e.g. a sub-counter output that becomes
    /// garbage after merging). Input/Mode qubits cannot be re-labeled.
    void set_role(QubitId q, RegisterRole role);

    std::uint32_t qubit_count() const { return static_cast<std::uint32_t>(roles_.size()); }

    std::size_t gate_count() const { return gates_.size(); }
    const Gate& gate_at(std::size_t i) const { return gates_[i]; }

    /// Validates cross-gate invariants (T-AND pairing) and freezes the
    /// circuit. The builder must not be used afterwards.
    Circuit finish();

private:
    QubitId new_qubit(RegisterRole role);

    std::string name_;
    std::uint32_t m_ = 0;
    CountMode mode_ = CountMode::Lzc;
    std::vector<Gate> gates_;
    std::vector<RegisterRole> roles_;
    std::vector<QubitId> input_;
    std::vector<QubitId> output_;
    std::optional<QubitId> mode_qubit_;
    std::vector<QubitId> reusable_pool_;  // LIFO
    std::vector<bool> allocated_;
    std::uint32_t cbits_ = 0;
    bool finished_ = false;
};

/// Full-scan structural check: registered qubits only, per-gate shape rules,
/// and TAndCompute/TAndUncompute pairing (targets whose final role is Output
/// or AncillaGarbage are output-carrying and exempt). Throws on violation.
void validate_circuit(const Circuit& circuit);

}  // namespace qlzoc
