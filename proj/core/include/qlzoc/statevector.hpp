#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qlzoc/gates.hpp"

namespace qlzoc {

using Amplitude = std::complex<double>;

/// One measurement branch of a run: unnormalized amplitudes (the squared
/// norm is the branch probability) plus the classical bits recorded so far.
struct Branch {
    std::vector<Amplitude> amps;
    std::vector<std::int8_t> cbits;

    double probability() const;
};

constexpr std::uint32_t kMaxStatevectorQubits = 12;
constexpr double kAmpTolerance = 1e-12;

/// Runs a Clifford+T(+measurement) gate sequence on `width` qubits starting
/// from the given basis state. Measurements fork branches deterministically
/// (outcome 0 first); zero-probability branches are dropped.
std::vector<Branch> run_statevector(const std::vector<Gate>& gates, std::uint32_t width,
                                    std::uint64_t basis_input, std::uint32_t classical_bits = 0);

/// Same, from an arbitrary initial state.
std::vector<Branch> run_statevector_state(const std::vector<Gate>& gates, std::uint32_t width,
                                          std::vector<Amplitude> initial,
                                          std::uint32_t classical_bits = 0);

/// Column-major unitary of a measurement-free sequence (column k = image of
/// basis state k).
std::vector<std::vector<Amplitude>> unitary_of(const std::vector<Gate>& gates, std::uint32_t width);

/// Max elementwise deviation between two matrices/states.
double max_deviation(const std::vector<std::vector<Amplitude>>& a,
                     const std::vector<std::vector<Amplitude>>& b);
double max_deviation(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b);

/// 8x8 Toffoli matrix (controls = qubits 0,1, target = qubit 2; basis index
/// bit k = qubit k).
std::vector<std::vector<Amplitude>> toffoli_matrix();

/// 8x8 iX matrix per i^(q0 q1) |q0,q1, y xor (q0 and q1)> with q0 = qubit 0,
/// q1 = qubit 1, y = qubit 2.
std::vector<std::vector<Amplitude>> ix_matrix();

}  // namespace qlzoc
