#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlzoc/circuit.hpp"
#include "qlzoc/generate.hpp"
#include "qlzoc/oracle.hpp"

namespace qlzoc {

/// Final classical values after running one basis-state input through a
/// macro-level circuit (X/CX/CCX/MCX/T-AND only).
struct SimOutcome {
    BitWord input_after;
    std::uint32_t gamma = 0;
    int mode_after = -1;  // -1 when the circuit has no mode qubit
    std::vector<std::pair<QubitId, int>> ancilla_final;
    std::vector<std::string> violations;

    bool clean() const { return violations.empty(); }
};

/// Classical simulation of a macro circuit on one basis input. Clifford+T
/// level gates (H/S/T/CZ/measurement) raise WrongLevelError.
SimOutcome run_basis(const Circuit& circuit, BitWord input, int mode_bit = -1);

struct VerificationReport {
    std::string design;
    std::uint32_t m_logical = 0;
    std::uint32_t m_built = 0;
    std::string oracle;  // "lzc" or "loc"
    int mode_bit = -1;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;
    // Evidence for ancilla classification: qubit -> ended nonzero on some
    // tested input. Covers every non-input/output/mode qubit.
    std::vector<std::pair<QubitId, bool>> ancilla_ever_nonzero;

    bool padded() const { return m_built != m_logical; }
    bool pass() const { return cases > 0 && failures == 0; }
};

std::string serialize_report(const VerificationReport& report);

/// Sweeps all 2^m basis inputs (m <= 20) against the matching oracle:
/// checks the count, input restoration, mode restoration, reusable-ancilla
/// cleanliness, and T-AND contracts. Non-native parallel widths are padded
/// and counts clamped to min(count, m).
VerificationReport verify_exhaustive(DesignId design, std::uint32_t m, int mode_bit = -1);

/// Stratified sampling for large m: for each k in [0, m] one word with
/// count exactly k, plus uniform random words, `samples` inputs in total.
VerificationReport verify_sampled(DesignId design, std::uint32_t m, std::uint64_t samples,
                                  std::uint64_t seed, int mode_bit = -1);

/// Runs an explicit list of input words.
VerificationReport verify_vectors(DesignId design, std::uint32_t m,
                                  const std::vector<std::uint64_t>& inputs, int mode_bit = -1);

/// Expected count for a design/mode/input under the reference oracle.
std::uint32_t oracle_count(DesignId design, BitWord x, int mode_bit = -1);

}  // namespace qlzoc
