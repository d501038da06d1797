#include "doctest.h"
#include "qlzoc/analyze.hpp"
#include "qlzoc/bitsim.hpp"
#include "qlzoc/decompose.hpp"
#include "qlzoc/statevector.hpp"

using namespace qlzoc;

TEST_CASE("width cap") {
    CHECK_THROWS_AS(run_statevector({}, 13, 0), CapacityError);
}

TEST_CASE("macro gates are rejected by the validator") {
    CHECK_THROWS_AS(run_statevector({Gate::tand_compute(0, 1, 2)}, 3, 0), WrongLevelError);
}

namespace {

// Packs a circuit-level assignment (input x, everything else 0, mode bit if
// any) into a basis index where bit q of the index is qubit q.
std::uint64_t basis_for(const Circuit& c, std::uint64_t x) {
    std::uint64_t idx = 0;
    for (std::uint32_t bit = 0; bit < c.input_width(); ++bit) {
        if (x >> bit & 1) {
            idx |= 1ull << c.input_msb_first()[c.input_width() - 1 - bit];
        }
    }
    return idx;
}

std::uint64_t expected_index(const Circuit& c, const SimOutcome& out) {
    std::uint64_t idx = 0;
    for (std::uint32_t bit = 0; bit < c.input_width(); ++bit) {
        if (out.input_after.value >> bit & 1) {
            idx |= 1ull << c.input_msb_first()[c.input_width() - 1 - bit];
        }
    }
    const auto& outputs = c.output_msb_first();
    for (std::uint32_t bit = 0; bit < outputs.size(); ++bit) {
        if (out.gamma >> bit & 1) idx |= 1ull << outputs[outputs.size() - 1 - bit];
    }
    for (const auto& [q, v] : out.ancilla_final) {
        if (v) idx |= 1ull << q;
    }
    return idx;
}

}  // namespace

TEST_CASE("expanded Clifford+T circuit agrees with the bit simulator") {
    // 8 qubits: 4 inputs + 3 outputs + 1 ancilla. Every branch of the
    // expanded run must be a point mass on the bit-level outcome.
    const Circuit macro = build_design(DesignId::TaPOp4Qlzc, 4);
    const Circuit low = expand_circuit(macro);
    REQUIRE(low.qubit_count() <= kMaxStatevectorQubits);
    for (std::uint64_t x = 0; x < 16; ++x) {
        const SimOutcome out = run_basis(macro, BitWord{x, 4});
        REQUIRE(out.clean());
        const std::uint64_t want = expected_index(low, out);
        auto branches =
            run_statevector(low.gates(), low.qubit_count(), basis_for(low, x),
                            low.classical_bit_count());
        REQUIRE(!branches.empty());
        for (const Branch& br : branches) {
            const double scale = 1.0 / std::sqrt(br.probability());
            for (std::uint64_t k = 0; k < br.amps.size(); ++k) {
                const double mag = std::abs(br.amps[k]) * scale;
                if (k == want) {
                    REQUIRE(std::abs(mag - 1.0) < 1e-9);
                } else {
                    REQUIRE(mag < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("plain-Toffoli designs expand to a measurement-free exact circuit") {
    // 2 inputs + 2 outputs + 2 flag ancillas; both flag Toffolis expand to
    // the 7-T sequence, so the full run stays a single exact branch.
    const Circuit macro = build_design(DesignId::Qlzc, 2);
    const Circuit low = expand_circuit(macro);
    REQUIRE(low.qubit_count() <= kMaxStatevectorQubits);
    for (std::uint64_t x = 0; x < 4; ++x) {
        const SimOutcome out = run_basis(macro, BitWord{x, 2});
        auto branches = run_statevector(low.gates(), low.qubit_count(), basis_for(low, x),
                                        low.classical_bit_count());
        REQUIRE(branches.size() == 1);
        const std::uint64_t want = expected_index(low, out);
        REQUIRE(std::abs(branches[0].amps[want] - Amplitude{1, 0}) < 1e-12);
    }
}

TEST_CASE("measurement branches agree pairwise on the surviving qubits") {
    const Circuit macro = build_design(DesignId::TaOpQlzc, 3);
    const Circuit low = expand_circuit(macro);
    REQUIRE(low.qubit_count() <= kMaxStatevectorQubits);
    for (std::uint64_t x = 0; x < 8; ++x) {
        auto branches = run_statevector(low.gates(), low.qubit_count(), basis_for(low, x),
                                        low.classical_bit_count());
        REQUIRE(branches.size() >= 2);
        std::vector<Amplitude> reference;
        for (const Branch& br : branches) {
            std::vector<Amplitude> scaled(br.amps.size());
            const double scale = 1.0 / std::sqrt(br.probability());
            for (std::size_t k = 0; k < br.amps.size(); ++k) scaled[k] = br.amps[k] * scale;
            if (reference.empty()) {
                reference = scaled;
            } else {
                REQUIRE(max_deviation(reference, scaled) < 1e-9);
            }
        }
    }
}
