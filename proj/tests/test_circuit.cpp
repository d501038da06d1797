#include "doctest.h"
#include "qlzoc/circuit.hpp"

using namespace qlzoc;

TEST_CASE("new circuits pre-register input and output registers") {
    CircuitBuilder b4("qlzc", 4);
    CHECK(b4.input_width() == 4);
    CHECK(b4.output_width() == 3);

    CircuitBuilder b1("qlzc", 1);
    CHECK(b1.output_width() == 1);

    CircuitBuilder b16("qlzc", 16);
    CHECK(b16.output_width() == 5);

    CHECK_THROWS_AS(CircuitBuilder("qlzc", 0), InvalidWidthError);
}

TEST_CASE("register views expose MSB-first ordering") {
    CircuitBuilder b("x", 4);
    CHECK(b.input(3) == b.input_msb_first().front());
    CHECK(b.input(0) == b.input_msb_first().back());
    CHECK(b.output(2) == b.output_msb_first().front());
}

TEST_CASE("reusable ancilla pool is LIFO") {
    CircuitBuilder b("x", 2);
    const QubitId a = b.alloc_ancilla(RegisterRole::AncillaReusable);
    const QubitId c = b.alloc_ancilla(RegisterRole::AncillaReusable);
    CHECK(a != c);
    b.release_ancilla(a);
    CHECK(b.alloc_ancilla(RegisterRole::AncillaReusable) == a);

    CHECK_THROWS_AS(b.release_ancilla(QubitId{99}), AllocationError);
    b.release_ancilla(c);
    CHECK_THROWS_AS(b.release_ancilla(c), AllocationError);
}

TEST_CASE("T-state qubits are never re-pooled") {
    CircuitBuilder b("x", 2);
    const QubitId t = b.alloc_ancilla(RegisterRole::TStateResource);
    CHECK_THROWS_AS(b.release_ancilla(t), AllocationError);
    CHECK(b.alloc_ancilla(RegisterRole::TStateResource) != t);
}

TEST_CASE("append validates gate shape and registry") {
    CircuitBuilder b("x", 3);
    CHECK_THROWS_AS(b.append(Gate::cx(0, 0)), MalformedGateError);
    CHECK_THROWS_AS(b.append(Gate::cx(0, 77)), RegistryError);
    CHECK_THROWS_AS(b.append(Gate{GateKind::CCX, {0}, {1}}), MalformedGateError);
    b.append(Gate::ccx(0, 1, 2));
    CHECK(b.gate_count() == 1);
}

TEST_CASE("T-AND targets cannot be input or mode qubits") {
    CircuitBuilder b("x", 3);
    CHECK_THROWS_AS(b.append(Gate::tand_compute(0, 1, 2)), MalformedGateError);
    const QubitId an = b.alloc_ancilla(RegisterRole::AncillaReusable);
    b.append(Gate::tand_compute(0, 1, an));
}

TEST_CASE("unmatched T-AND compute on a reusable ancilla is rejected") {
    CircuitBuilder b("x", 2);
    const QubitId an = b.alloc_ancilla(RegisterRole::AncillaReusable);
    b.append(Gate::tand_compute(0, 1, an));
    CHECK_THROWS_AS(b.finish(), MalformedGateError);

    CircuitBuilder ok("x", 2);
    const QubitId an2 = ok.alloc_ancilla(RegisterRole::AncillaReusable);
    ok.append(Gate::tand_compute(0, 1, an2));
    ok.append(Gate::tand_uncompute(0, 1, an2));
    CHECK_NOTHROW(ok.finish());
}

TEST_CASE("output-carrying T-AND targets are exempt from pairing") {
    CircuitBuilder b("x", 2);
    b.append(Gate::tand_compute(0, 1, b.output(0)));
    CHECK_NOTHROW(b.finish());
}

TEST_CASE("uncompute before compute is rejected") {
    CircuitBuilder b("x", 2);
    const QubitId an = b.alloc_ancilla(RegisterRole::AncillaReusable);
    b.append(Gate::tand_uncompute(0, 1, an));
    CHECK_THROWS_AS(b.finish(), MalformedGateError);
}

TEST_CASE("mcx helper canonicalizes small control counts") {
    CHECK(Gate::mcx({0}, 1).kind == GateKind::CX);
    CHECK(Gate::mcx({0, 1}, 2).kind == GateKind::CCX);
    CHECK(Gate::mcx({0, 1, 2}, 3).kind == GateKind::MCX);
}
