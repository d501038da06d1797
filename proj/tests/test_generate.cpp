#include <algorithm>

#include "doctest.h"
#include "qlzoc/bitsim.hpp"
#include "qlzoc/circuit_io.hpp"
#include "qlzoc/generate.hpp"

using namespace qlzoc;

namespace {

// Runs an i-MCXn stage with both the controls and the target register
// supplied through the input word: controls in the low i bits, gamma above.
std::uint64_t run_imcxn(IMcxnSpec spec, std::uint64_t controls_value, std::uint64_t gamma_in,
                        std::uint32_t gamma_width) {
    const auto i = static_cast<std::uint32_t>(spec.i);
    CircuitBuilder b("imcxn", i + gamma_width);
    std::vector<QubitId> controls;
    for (std::uint32_t k = 0; k < i; ++k) controls.push_back(b.input(k));
    std::vector<QubitId> gamma;
    for (std::uint32_t k = 0; k < gamma_width; ++k) gamma.push_back(b.input(i + k));
    append_imcxn(b, spec, controls, gamma);
    const Circuit c = b.finish();
    const std::uint64_t x = controls_value | gamma_in << i;
    const SimOutcome out = run_basis(c, BitWord{x, i + gamma_width});
    REQUIRE(out.clean());
    for (const auto& [q, v] : out.ancilla_final) REQUIRE(v == 0);
    return out.input_after.value >> i;
}

}  // namespace

TEST_CASE("i-MCXn flips the n LSBs exactly when all controls are 1") {
    using V = IMcxnSpec::Variant;
    // i = 1: a single CX onto gamma_0.
    CHECK(run_imcxn(IMcxnSpec::make(1, V::Original), 1, 0b000, 3) == 0b001);
    // i = 4 increments 3 -> 4 when the prefix is all ones.
    CHECK(run_imcxn(IMcxnSpec::make(4, V::Original), 0b1111, 0b011, 3) == 0b100);
    CHECK(run_imcxn(IMcxnSpec::make(4, V::AncillaAssisted), 0b1111, 0b011, 3) == 0b100);
    CHECK(run_imcxn(IMcxnSpec::make(4, V::PowerOfTwoInPlace), 0b1111, 0b011, 3) == 0b100);
    // One control low: identity branch.
    CHECK(run_imcxn(IMcxnSpec::make(4, V::Original), 0b0111, 0b011, 3) == 0b011);
    CHECK(run_imcxn(IMcxnSpec::make(4, V::AncillaAssisted), 0b0111, 0b011, 3) == 0b011);
}

TEST_CASE("i-MCXn variants agree exhaustively at i = 4") {
    using V = IMcxnSpec::Variant;
    for (std::uint64_t ctrl = 0; ctrl < 16; ++ctrl) {
        // The in-place variant presumes gamma < 2^p at stage i = 2^p, which
        // holds inside the counter; sweep that reachable range.
        for (std::uint64_t gamma = 0; gamma < 4; ++gamma) {
            const auto a = run_imcxn(IMcxnSpec::make(4, V::Original), ctrl, gamma, 3);
            const auto b = run_imcxn(IMcxnSpec::make(4, V::AncillaAssisted), ctrl, gamma, 3);
            const auto c = run_imcxn(IMcxnSpec::make(4, V::PowerOfTwoInPlace), ctrl, gamma, 3);
            REQUIRE(a == b);
            REQUIRE(a == c);
        }
    }
}

TEST_CASE("i-MCXn spec validation") {
    CHECK_THROWS_AS(IMcxnSpec::make(6, IMcxnSpec::Variant::PowerOfTwoInPlace),
                    VariantMismatchError);
    CHECK_THROWS_AS(IMcxnSpec::make(0, IMcxnSpec::Variant::Original), DomainError);
    CHECK(IMcxnSpec::make(6, IMcxnSpec::Variant::Original).n == 2);
}

namespace {

std::int64_t cx_layer_depth(const std::vector<Gate>& gates, QubitId max_q) {
    std::vector<std::int64_t> clock(max_q + 1, 0);
    std::int64_t depth = 0;
    for (const Gate& g : gates) {
        std::int64_t base = 0;
        for (QubitId q : g.qubits()) base = std::max(base, clock[q]);
        for (QubitId q : g.qubits()) clock[q] = base + 1;
        depth = std::max(depth, base + 1);
    }
    return depth;
}

}  // namespace

TEST_CASE("fan-out copies the control in logarithmic depth") {
    for (std::uint32_t n = 1; n <= 16; ++n) {
        const QubitId ctrl = 0;
        std::vector<QubitId> ancillas;
        for (std::uint32_t k = 0; k < n; ++k) ancillas.push_back(k + 1);
        const auto gates = build_fanout(ctrl, ancillas);

        std::uint32_t want_depth = 0;
        while ((1u << want_depth) < n + 1) ++want_depth;
        CHECK(cx_layer_depth(gates, n) == want_depth);

        for (std::uint64_t bit : {0ull, 1ull}) {
            std::vector<std::uint64_t> v(n + 1, 0);
            v[0] = bit;
            for (const Gate& g : gates) v[g.targets[0]] ^= v[g.controls[0]];
            for (std::uint32_t k = 1; k <= n; ++k) REQUIRE(v[k] == bit);
            // Reversed schedule restores every ancilla.
            for (std::size_t k = gates.size(); k-- > 0;) {
                v[gates[k].targets[0]] ^= v[gates[k].controls[0]];
            }
            for (std::uint32_t k = 1; k <= n; ++k) REQUIRE(v[k] == 0);
        }
    }
    CHECK(build_fanout(0, {1}).size() == 1);
}

TEST_CASE("QLOC computes the leading-one count") {
    const Circuit c = build_design(DesignId::Qloc, 4);
    CHECK(run_basis(c, BitWord{0b1110, 4}).gamma == 3);
    CHECK(run_basis(c, BitWord{0b1111, 4}).gamma == 4);  // MSB-only encoding 0b100
    CHECK(verify_exhaustive(DesignId::Qloc, 8).pass());
}

TEST_CASE("QLZC restores its input") {
    const Circuit c = build_design(DesignId::Qlzc, 4);
    const SimOutcome a = run_basis(c, BitWord{0b0001, 4});
    CHECK(a.gamma == 3);
    CHECK(a.input_after.value == 0b0001);
    CHECK(run_basis(c, BitWord{0b1000, 4}).gamma == 0);
    CHECK(run_basis(build_design(DesignId::Qlzc, 11), BitWord{0, 11}).gamma == 11);
}

TEST_CASE("4-qubit optimized blocks match the oracle on all 16 inputs") {
    for (DesignId d : {DesignId::POp4Qlzc, DesignId::TaPOp4Qlzc}) {
        CHECK(verify_exhaustive(d, 4).pass());
        CHECK_THROWS_AS(build_design(d, 5), VariantMismatchError);
    }
}

TEST_CASE("the 3-MCXn reuse logic precedes the 4-MCXn flips") {
    const Circuit c = build_design(DesignId::TaPOp4Qlzc, 4);
    const QubitId g2 = c.output_msb_first()[0];
    std::size_t uncompute_at = 0, first_flip = SIZE_MAX;
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        const Gate& g = c.gates()[i];
        if (g.kind == GateKind::TAndUncompute) uncompute_at = i;
        if (g.kind == GateKind::CX && g.controls[0] == g2) first_flip = std::min(first_flip, i);
    }
    REQUIRE(first_flip != SIZE_MAX);
    CHECK(uncompute_at < first_flip);
}

TEST_CASE("parallel counters match the oracle exhaustively") {
    CHECK(verify_exhaustive(DesignId::TaOpPqlzc, 8).pass());
    CHECK(verify_exhaustive(DesignId::FoTaOpPqlzc, 8).pass());
    CHECK(verify_exhaustive(DesignId::TaOpPqloc, 8).pass());
    CHECK_THROWS_AS(build_design(DesignId::TaOpPqlzc, 6), ShapeError);
    CHECK_THROWS_AS(build_design(DesignId::TaOpPqlzc, 4), ShapeError);
}

TEST_CASE("merge behavior on the boundary cases") {
    const Circuit c = build_design(DesignId::TaOpPqlzc, 8);
    CHECK(run_basis(c, BitWord{0, 8}).gamma == 8);           // gammaH = gammaL = 4
    CHECK(run_basis(c, BitWord{0b00000010, 8}).gamma == 6);  // high all-zero, low 2
    const SimOutcome high_decides = run_basis(c, BitWord{0b01000000, 8});
    CHECK(high_decides.gamma == 1);  // high decides
    // The merged-away low register still holds gamma_L = 4 (0b100) as garbage.
    std::uint64_t garbage_value = 0;
    for (const auto& [q, v] : high_decides.ancilla_final) {
        if (c.role_of(q) == RegisterRole::AncillaGarbage) {
            garbage_value = garbage_value << 1 | static_cast<std::uint64_t>(v);
        }
    }
    CHECK(garbage_value == 0b100);  // garbage ids run MSB..LSB in allocation order
}

TEST_CASE("fan-out control copies are transparent") {
    const Circuit with = build_design(DesignId::FoTaOpPqlzc, 8);
    const Circuit without = build_design(DesignId::TaOpPqlzc, 8);
    for (std::uint64_t x = 0; x < 256; ++x) {
        const SimOutcome a = run_basis(with, BitWord{x, 8});
        const SimOutcome b = run_basis(without, BitWord{x, 8});
        REQUIRE(a.clean());
        REQUIRE(a.gamma == b.gamma);
    }
}

TEST_CASE("reconfigurable counter equals the dedicated designs per mode") {
    const Circuit r = build_design(DesignId::ReconfigurableQlzoc, 8);
    const Circuit qloc = build_design(DesignId::TaOpQloc, 8);
    for (std::uint64_t x = 0; x < 256; ++x) {
        const SimOutcome c0 = run_basis(r, BitWord{x, 8}, 0);
        REQUIRE(c0.clean());
        REQUIRE(c0.mode_after == 0);
        REQUIRE(c0.gamma == run_basis(qloc, BitWord{x, 8}).gamma);
        const SimOutcome c1 = run_basis(r, BitWord{x, 8}, 1);
        REQUIRE(c1.mode_after == 1);
        REQUIRE(c1.gamma == lzc(BitWord{x, 8}));
    }
}

TEST_CASE("padding preserves the counts up to the clamp rule") {
    for (std::uint64_t x = 0; x < (1ull << 11); ++x) {
        const BitWord w{x, 11};
        const BitWord p = pad_input(w, 16, PadMode::Lzc);
        REQUIRE(std::min(lzc(p), 11u) == lzc(w));
    }
    for (std::uint64_t x = 0; x < (1ull << 13); ++x) {
        const BitWord w{x, 13};
        const BitWord p = pad_input(w, 16, PadMode::Loc);
        REQUIRE(std::min(loc(p), 13u) == loc(w));
    }
    const BitWord zero5 = pad_input(BitWord{0, 5}, 8, PadMode::Lzc);
    CHECK(lzc(zero5) == 8);
    CHECK(std::min(lzc(zero5), 5u) == 5);
    CHECK_THROWS_AS(pad_input(BitWord{0, 17}, 16, PadMode::Lzc), ShapeError);
}

TEST_CASE("generation is deterministic") {
    for (auto [d, m] : std::vector<std::pair<DesignId, std::uint32_t>>{
             {DesignId::TaOpQlzc, 9u},
             {DesignId::FoTaOpPqlzc, 16u},
             {DesignId::ReconfigurableQlzoc, 5u}}) {
        CHECK(serialize_circuit(build_design(d, m)) == serialize_circuit(build_design(d, m)));
    }
}

TEST_CASE("design names round-trip and aliases resolve") {
    for (DesignId d : kAllDesigns) {
        auto back = parse_design(design_name(d));
        REQUIRE(back.has_value());
        CHECK(*back == d);
    }
    CHECK(parse_design("pqlzc") == DesignId::TaOpPqlzc);
    CHECK(parse_design("fo-pqlzc") == DesignId::FoTaOpPqlzc);
    CHECK(!parse_design("nonsense").has_value());
}
