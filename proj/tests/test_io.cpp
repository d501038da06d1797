#include "doctest.h"
#include "qlzoc/bitsim.hpp"
#include "qlzoc/circuit_io.hpp"
#include "qlzoc/decompose.hpp"
#include "qlzoc/generate.hpp"

using namespace qlzoc;

TEST_CASE("interchange text round-trips byte-identically") {
    for (auto [d, m] : std::vector<std::pair<DesignId, std::uint32_t>>{
             {DesignId::TaOpQlzc, 5u},
             {DesignId::FoTaOpPqlzc, 8u},
             {DesignId::ReconfigurableQlzoc, 4u}}) {
        const Circuit c = build_design(d, m);
        const std::string text = serialize_circuit(c);
        const Circuit back = parse_circuit(text);
        CHECK(serialize_circuit(back) == text);
        CHECK(back.gates() == c.gates());
        CHECK(back.mode() == c.mode());
    }
}

TEST_CASE("expanded circuits round-trip through the interchange format") {
    const Circuit low =
        expand_circuit(build_design(DesignId::TaOpQlzc, 3), {}, ExpandLevel::CliffordT);
    const std::string text = serialize_circuit(low);
    CHECK(text.find("MEASURE") != std::string::npos);
    CHECK(text.find("CZIF") != std::string::npos);
    const Circuit back = parse_circuit(text);
    CHECK(back.gates() == low.gates());
    CHECK(back.classical_bit_count() == low.classical_bit_count());
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_circuit("not a circuit\n"), FormatError);
    CHECK_THROWS_AS(parse_circuit("qlzoc-circuit v1\nname x\n"), FormatError);  // no end
    const std::string good = serialize_circuit(build_design(DesignId::Qlzc, 2));
    std::string bad = good;
    bad.replace(bad.find("CX"), 2, "QQ");
    CHECK_THROWS_AS(parse_circuit(bad), FormatError);
}

TEST_CASE("parsed circuits simulate identically") {
    const Circuit c = build_design(DesignId::TaOpPqlzc, 8);
    const Circuit back = parse_circuit(serialize_circuit(c));
    for (std::uint64_t x = 0; x < 256; x += 17) {
        CHECK(run_basis(back, BitWord{x, 8}).gamma == run_basis(c, BitWord{x, 8}).gamma);
    }
}

TEST_CASE("qasm emission round-trips structurally") {
    const Circuit c = build_design(DesignId::TaPOp4Qlzc, 4);
    const std::string text = emit_qasm(c);
    CHECK(text.find("OPENQASM 2.0;") == 0);
    CHECK(text.find("measure") != std::string::npos);  // expanded T-AND uncompute
    CHECK(text.find("tand") == std::string::npos);     // no macro leaks into the dialect

    const Circuit back = parse_qasm(text);
    const Circuit expanded = expand_circuit(c, {}, ExpandLevel::Qasm);
    CHECK(back.gates() == expanded.gates());
    CHECK(back.qubit_count() == expanded.qubit_count());
    CHECK(back.input_msb_first() == expanded.input_msb_first());
    CHECK(back.output_msb_first() == expanded.output_msb_first());
}

TEST_CASE("qasm classical conditions survive the round trip") {
    const Circuit c = build_design(DesignId::TaOpQlzc, 3);
    const std::string text = emit_qasm(c);
    CHECK(text.find("if(m0==1) cz") != std::string::npos);
    const Circuit back = parse_qasm(text);
    CHECK(back.gates() == expand_circuit(c, {}, ExpandLevel::Qasm).gates());
}

TEST_CASE("fan-out block precedes the merge CCX block in emissions") {
    const Circuit c = build_design(DesignId::FoTaOpPqlzc, 8);
    std::size_t first_ccx = SIZE_MAX, first_fo_cx = SIZE_MAX;
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        const Gate& g = c.gates()[i];
        if (g.kind == GateKind::CCX) first_ccx = std::min(first_ccx, i);
        if (g.kind == GateKind::CX && c.role_of(g.controls[0]) == RegisterRole::Output &&
            c.role_of(g.targets[0]) == RegisterRole::AncillaReusable) {
            first_fo_cx = std::min(first_fo_cx, i);
        }
    }
    REQUIRE(first_ccx != SIZE_MAX);
    REQUIRE(first_fo_cx != SIZE_MAX);
    CHECK(first_fo_cx < first_ccx);

    // The same ordering is visible in the emitted text.
    const std::string text = emit_qasm(c);
    CHECK(text.find("ccx") != std::string::npos);
}
