#include <complex>

#include "doctest.h"
#include "qlzoc/analyze.hpp"
#include "qlzoc/bitsim.hpp"
#include "qlzoc/decompose.hpp"
#include "qlzoc/statevector.hpp"

using namespace qlzoc;

namespace {

// Bare circuit over `width` input qubits for metric checks on raw sequences.
Circuit wrap(std::uint32_t width, std::vector<Gate> gates, std::uint32_t cbits = 0) {
    std::vector<RegisterRole> roles(width, RegisterRole::Input);
    std::vector<QubitId> input;
    for (std::uint32_t i = 0; i < width; ++i) input.push_back(width - 1 - i);
    return Circuit::from_parts("wrap", width, CountMode::Lzc, std::move(roles), std::move(input),
                               {}, std::nullopt, cbits, std::move(gates));
}

int count_t(const std::vector<Gate>& gates) {
    int n = 0;
    for (const Gate& g : gates) n += g.is_t_type() ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("Amy Toffoli expansion is the exact Toffoli unitary") {
    const auto gates = expand_ccx_amy(0, 1, 2);
    CHECK(max_deviation(unitary_of(gates, 3), toffoli_matrix()) < 1e-12);

    auto on = run_statevector(gates, 3, 0b011);  // |110> in q2 q1 q0 reading
    REQUIRE(on.size() == 1);
    CHECK(std::abs(on[0].amps[0b111] - Amplitude{1, 0}) < 1e-12);

    auto off = run_statevector(gates, 3, 0b010);
    CHECK(std::abs(off[0].amps[0b010] - Amplitude{1, 0}) < 1e-12);
}

TEST_CASE("Amy Toffoli has 7 T gates, T-depth 3, total depth 9") {
    const auto gates = expand_ccx_amy(0, 1, 2);
    CHECK(count_t(gates) == 7);
    const Circuit c = wrap(3, gates);
    const auto [tc, td] = t_metrics(c);
    CHECK(tc == 7);
    CHECK(td == 3);
    CHECK(depth_width(c).total_depth == 9);
    CHECK_THROWS_AS(expand_ccx_amy(0, 0, 2), MalformedGateError);
}

TEST_CASE("iX expansion matches its defining action") {
    const auto gates = expand_ix(0, 1, 2);
    CHECK(max_deviation(unitary_of(gates, 3), ix_matrix()) < 1e-12);

    auto both = run_statevector(gates, 3, 0b011);
    CHECK(std::abs(both[0].amps[0b111] - Amplitude{0, 1}) < 1e-12);  // i |111>
    auto one = run_statevector(gates, 3, 0b010);
    CHECK(std::abs(one[0].amps[0b010] - Amplitude{1, 0}) < 1e-12);
    CHECK(count_t(gates) == 4);
    CHECK_THROWS_AS(expand_ix(2, 1, 2), MalformedGateError);
}

TEST_CASE("T-AND compute writes AND(controls) with unit phase") {
    const auto gates = expand_tand_compute(0, 1, 2);
    CHECK(count_t(gates) == 4);
    const auto [tc, td] = t_metrics(wrap(3, gates));
    CHECK(tc == 4);
    CHECK(td == 2);
    for (std::uint64_t c0 = 0; c0 < 2; ++c0) {
        for (std::uint64_t c1 = 0; c1 < 2; ++c1) {
            auto branches = run_statevector(gates, 3, c0 | c1 << 1);
            REQUIRE(branches.size() == 1);
            const std::uint64_t want = c0 | c1 << 1 | (c0 & c1) << 2;
            CHECK(std::abs(branches[0].amps[want] - Amplitude{1, 0}) < 1e-12);
        }
    }
}

TEST_CASE("T-AND uncompute is T-free and restores controls on both branches") {
    auto gates = expand_tand_compute(0, 1, 2);
    const auto unc = expand_tand_uncompute(0, 1, 2, 0);
    CHECK(count_t(unc) == 0);
    gates.insert(gates.end(), unc.begin(), unc.end());

    // Uniform superposition over the controls: branch-wise the compute and
    // uncompute pair must act as the identity.
    std::vector<Amplitude> initial(8, Amplitude{0, 0});
    for (std::uint64_t k = 0; k < 4; ++k) initial[k] = Amplitude{0.5, 0};
    auto branches = run_statevector_state(gates, 3, initial, 1);
    REQUIRE(branches.size() == 2);
    for (const Branch& br : branches) {
        CHECK(br.probability() == doctest::Approx(0.5).epsilon(1e-12));
        const double scale = 1.0 / std::sqrt(br.probability());
        for (std::uint64_t k = 0; k < 8; ++k) {
            const Amplitude want = k < 4 ? Amplitude{0.5, 0} : Amplitude{0, 0};
            CHECK(std::abs(br.amps[k] * scale - want) < 1e-12);
        }
    }

    // Basis case: controls (0,0). Both measurement branches restore |000>.
    auto zeros = run_statevector(gates, 3, 0, 1);
    REQUIRE(zeros.size() == 2);
    for (const Branch& br : zeros) {
        const double scale = 1.0 / std::sqrt(br.probability());
        CHECK(std::abs(br.amps[0] * scale - Amplitude{1, 0}) < 1e-12);
    }
}

TEST_CASE("Jones Toffoli acts as Toffoli on both measurement branches") {
    const auto gates = expand_ccx_jones(0, 1, 2, 3, 0);
    CHECK(count_t(gates) == 4);
    for (std::uint64_t k = 0; k < 8; ++k) {
        auto branches = run_statevector(gates, 4, k, 1);
        std::uint64_t want = k;
        if ((k & 3) == 3) want ^= 4;
        for (const Branch& br : branches) {
            const double scale = 1.0 / std::sqrt(br.probability());
            CHECK(std::abs(br.amps[want] * scale - Amplitude{1, 0}) < 1e-12);
        }
    }
}

TEST_CASE("MCX ladder matches the MCX truth table exhaustively") {
    for (std::uint32_t k : {3u, 4u, 5u, 6u, 7u, 8u}) {
        CircuitBuilder b("mcx-ladder", k);
        std::vector<QubitId> controls;
        for (std::uint32_t i = 0; i < k; ++i) controls.push_back(b.input(i));
        append_mcx_ladder(b, controls, b.output(0));
        const Circuit c = b.finish();
        for (std::uint64_t x = 0; x < (1ull << k); ++x) {
            const SimOutcome out = run_basis(c, BitWord{x, k});
            REQUIRE(out.clean());
            const std::uint32_t expect = x == (1ull << k) - 1 ? 1 : 0;
            REQUIRE((out.gamma & 1) == expect);
            REQUIRE(out.input_after.value == x);
            for (const auto& [q, v] : out.ancilla_final) REQUIRE(v == 0);
        }
    }
}

TEST_CASE("T-count additivity across macro expansion") {
    for (auto [design, m] : std::vector<std::pair<DesignId, std::uint32_t>>{
             {DesignId::TaOpPqlzc, 8u}, {DesignId::POp4Qlzc, 4u}, {DesignId::TaOpQlzc, 6u}}) {
        const Circuit macro = build_design(design, m);
        int ccx = 0, tand = 0, bare = 0;
        for (const Gate& g : macro.gates()) {
            if (g.kind == GateKind::CCX) ++ccx;
            if (g.kind == GateKind::TAndCompute) ++tand;
            if (g.is_t_type()) ++bare;
        }
        const Circuit expanded = expand_circuit(macro);
        const auto [tc, td] = t_metrics(expanded);
        (void)td;
        CHECK(tc == 7 * ccx + 4 * tand + bare);
    }
}

TEST_CASE("Jones policy expands CCX through measurement") {
    CircuitBuilder b("ccx", 3);
    const QubitId an = b.alloc_ancilla(RegisterRole::AncillaReusable);
    (void)an;
    b.append(Gate::ccx(0, 1, 2));
    const Circuit c = b.finish();
    DecompositionPolicy jones;
    jones.ccx_style = CcxStyle::JonesMeasurement;
    const Circuit low = expand_circuit(c, jones);
    const auto [tc, td] = t_metrics(low);
    CHECK(tc == 4);
    CHECK(td >= 1);
    bool has_measure = false;
    for (const Gate& g : low.gates()) has_measure |= g.kind == GateKind::Measure;
    CHECK(has_measure);
}
