#include "qlzoc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qlzoc {

namespace {

const Amplitude kOmega = std::polar(1.0, std::numbers::pi / 4);  // e^{i pi/4}
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void apply_phase(std::vector<Amplitude>& amps, std::uint32_t q, Amplitude phase) {
    const std::uint64_t bit = 1ull << q;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (k & bit) amps[k] *= phase;
    }
}

void apply_x(std::vector<Amplitude>& amps, std::uint32_t q) {
    const std::uint64_t bit = 1ull << q;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (!(k & bit)) std::swap(amps[k], amps[k | bit]);
    }
}

void apply_h(std::vector<Amplitude>& amps, std::uint32_t q) {
    const std::uint64_t bit = 1ull << q;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (k & bit) continue;
        const Amplitude a0 = amps[k];
        const Amplitude a1 = amps[k | bit];
        amps[k] = (a0 + a1) * kInvSqrt2;
        amps[k | bit] = (a0 - a1) * kInvSqrt2;
    }
}

void apply_controlled_x(std::vector<Amplitude>& amps, const std::vector<QubitId>& controls,
                        std::uint32_t target) {
    std::uint64_t cmask = 0;
    for (QubitId c : controls) cmask |= 1ull << c;
    const std::uint64_t tbit = 1ull << target;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & cmask) == cmask && !(k & tbit)) std::swap(amps[k], amps[k | tbit]);
    }
}

void apply_cz(std::vector<Amplitude>& amps, std::uint32_t a, std::uint32_t b) {
    const std::uint64_t mask = (1ull << a) | (1ull << b);
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & mask) == mask) amps[k] = -amps[k];
    }
}

}  // namespace

double Branch::probability() const {
    double p = 0;
    for (const auto& a : amps) p += std::norm(a);
    return p;
}

std::vector<Branch> run_statevector_state(const std::vector<Gate>& gates, std::uint32_t width,
                                          std::vector<Amplitude> initial,
                                          std::uint32_t classical_bits) {
    if (width > kMaxStatevectorQubits) {
        throw CapacityError("statevector validator is limited to 12 qubits");
    }
    if (initial.size() != (1ull << width)) throw DomainError("initial state has wrong dimension");

    std::vector<Branch> branches;
    branches.push_back(Branch{std::move(initial), std::vector<std::int8_t>(classical_bits, 0)});

    for (const Gate& g : gates) {
        if (g.kind == GateKind::Measure) {
            std::vector<Branch> next;
            const std::uint64_t bit = 1ull << g.targets[0];
            for (Branch& br : branches) {
                for (int outcome = 0; outcome < 2; ++outcome) {
                    Branch proj;
                    proj.amps.assign(br.amps.size(), Amplitude{0, 0});
                    double norm2 = 0;
                    for (std::uint64_t k = 0; k < br.amps.size(); ++k) {
                        const bool one = (k & bit) != 0;
                        if (one == (outcome == 1)) {
                            proj.amps[k] = br.amps[k];
                            norm2 += std::norm(br.amps[k]);
                        }
                    }
                    if (norm2 < kAmpTolerance * kAmpTolerance) continue;
                    proj.cbits = br.cbits;
                    if (static_cast<std::size_t>(g.cbit) >= proj.cbits.size()) {
                        proj.cbits.resize(g.cbit + 1, 0);
                    }
                    proj.cbits[g.cbit] = static_cast<std::int8_t>(outcome);
                    next.push_back(std::move(proj));
                }
            }
            branches = std::move(next);
            continue;
        }
        for (Branch& br : branches) {
            auto& amps = br.amps;
            switch (g.kind) {
                case GateKind::X: apply_x(amps, g.targets[0]); break;
                case GateKind::H: apply_h(amps, g.targets[0]); break;
                case GateKind::S: apply_phase(amps, g.targets[0], Amplitude{0, 1}); break;
                case GateKind::Sdg: apply_phase(amps, g.targets[0], Amplitude{0, -1}); break;
                case GateKind::T: apply_phase(amps, g.targets[0], kOmega); break;
                case GateKind::Tdg: apply_phase(amps, g.targets[0], std::conj(kOmega)); break;
                case GateKind::CX:
                case GateKind::CCX:
                case GateKind::MCX: apply_controlled_x(amps, g.controls, g.targets[0]); break;
                case GateKind::CZ: apply_cz(amps, g.targets[0], g.targets[1]); break;
                case GateKind::CzIf:
                    if (br.cbits[g.cbit]) apply_cz(amps, g.targets[0], g.targets[1]);
                    break;
                case GateKind::XIf:
                    if (br.cbits[g.cbit]) apply_x(amps, g.targets[0]);
                    break;
                case GateKind::TAndCompute:
                case GateKind::TAndUncompute:
                    throw WrongLevelError("macro T-AND fed to the statevector validator");
                case GateKind::Measure: break;  // handled above
            }
        }
    }
    return branches;
}

std::vector<Branch> run_statevector(const std::vector<Gate>& gates, std::uint32_t width,
                                    std::uint64_t basis_input, std::uint32_t classical_bits) {
    if (width > kMaxStatevectorQubits) {
        throw CapacityError("statevector validator is limited to 12 qubits");
    }
    std::vector<Amplitude> initial(1ull << width, Amplitude{0, 0});
    initial[basis_input] = Amplitude{1, 0};
    return run_statevector_state(gates, width, std::move(initial), classical_bits);
}

std::vector<std::vector<Amplitude>> unitary_of(const std::vector<Gate>& gates,
                                               std::uint32_t width) {
    const std::uint64_t dim = 1ull << width;
    std::vector<std::vector<Amplitude>> cols;
    cols.reserve(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        auto branches = run_statevector(gates, width, k);
        if (branches.size() != 1) {
            throw WrongLevelError("unitary_of requires a measurement-free sequence");
        }
        cols.push_back(std::move(branches[0].amps));
    }
    return cols;
}

double max_deviation(const std::vector<Amplitude>& a, const std::vector<Amplitude>& b) {
    double dev = a.size() == b.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        dev = std::max(dev, std::abs(a[i] - b[i]));
    }
    return dev;
}

double max_deviation(const std::vector<std::vector<Amplitude>>& a,
                     const std::vector<std::vector<Amplitude>>& b) {
    double dev = a.size() == b.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        dev = std::max(dev, max_deviation(a[i], b[i]));
    }
    return dev;
}

std::vector<std::vector<Amplitude>> toffoli_matrix() {
    std::vector<std::vector<Amplitude>> m(8, std::vector<Amplitude>(8, Amplitude{0, 0}));
    for (std::uint64_t k = 0; k < 8; ++k) {
        std::uint64_t img = k;
        if ((k & 3) == 3) img ^= 4;
        m[k][img] = Amplitude{1, 0};
    }
    return m;
}

std::vector<std::vector<Amplitude>> ix_matrix() {
    std::vector<std::vector<Amplitude>> m(8, std::vector<Amplitude>(8, Amplitude{0, 0}));
    for (std::uint64_t k = 0; k < 8; ++k) {
        std::uint64_t img = k;
        Amplitude phase{1, 0};
        if ((k & 3) == 3) {
            img ^= 4;
            phase = Amplitude{0, 1};
        }
        m[k][img] = phase;
    }
    return m;
}

}  // namespace qlzoc
