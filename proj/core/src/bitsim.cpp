#include "qlzoc/bitsim.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <random>
#include <sstream>

namespace qlzoc {

namespace {

// 64 basis inputs evaluated per pass, one machine word per qubit.
struct WordState {
    std::vector<std::uint64_t> q;
    std::uint64_t active = ~0ull;
    std::uint64_t violation = 0;
    std::size_t first_bad_gate = SIZE_MAX;

    void note(std::uint64_t bad, std::size_t gate_index) {
        bad &= active;
        if (bad && first_bad_gate == SIZE_MAX) first_bad_gate = gate_index;
        violation |= bad;
    }
};

void run_words(const Circuit& c, WordState& st) {
    const auto& gates = c.gates();
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        const Gate& g = gates[gi];
        switch (g.kind) {
            case GateKind::X: st.q[g.targets[0]] = ~st.q[g.targets[0]]; break;
            case GateKind::CX: st.q[g.targets[0]] ^= st.q[g.controls[0]]; break;
            case GateKind::CCX:
                st.q[g.targets[0]] ^= st.q[g.controls[0]] & st.q[g.controls[1]];
                break;
            case GateKind::MCX: {
                std::uint64_t all = ~0ull;
                for (QubitId cq : g.controls) all &= st.q[cq];
                st.q[g.targets[0]] ^= all;
                break;
            }
            case GateKind::TAndCompute: {
                st.note(st.q[g.targets[0]], gi);  // target must enter as |0>
                st.q[g.targets[0]] = st.q[g.controls[0]] & st.q[g.controls[1]];
                break;
            }
            case GateKind::TAndUncompute: {
                const std::uint64_t expect = st.q[g.controls[0]] & st.q[g.controls[1]];
                st.note(st.q[g.targets[0]] ^ expect, gi);
                st.q[g.targets[0]] = 0;
                break;
            }
            default:
                throw WrongLevelError(std::string("gate ") + gate_kind_name(g.kind) +
                                      " is not a macro-level classical gate");
        }
    }
}

std::uint64_t register_value(const WordState& st, const std::vector<QubitId>& msb_first,
                             std::uint32_t lane) {
    std::uint64_t v = 0;
    for (QubitId q : msb_first) v = v << 1 | (st.q[q] >> lane & 1);
    return v;
}

struct SweepContext {
    DesignId design;
    std::uint32_t m_logical;
    int mode_bit;
    Circuit circuit;
    PadMode pad_mode = PadMode::Lzc;
    bool loc_oracle = false;

    SweepContext(DesignId d, std::uint32_t m, int mb, Circuit c)
        : design(d), m_logical(m), mode_bit(mb), circuit(std::move(c)) {}
};

SweepContext make_context(DesignId design, std::uint32_t m, int mode_bit) {
    if (m == 0) throw InvalidWidthError("counter width must be positive");
    if (design_mode(design) == CountMode::Reconfigurable && mode_bit != 0 && mode_bit != 1) {
        throw DomainError("the reconfigurable design needs a mode bit of 0 or 1");
    }
    std::uint32_t m_built = m;
    if (design_is_parallel(design) && !design_width_ok(design, m)) {
        m_built = native_parallel_width(m);
    }
    if (!design_width_ok(design, m_built)) {
        throw ShapeError("design " + design_name(design) + " cannot be built at width " +
                         std::to_string(m));
    }
    SweepContext ctx(design, m,
                     design_mode(design) == CountMode::Reconfigurable ? mode_bit : -1,
                     build_design(design, m_built));
    switch (design_mode(design)) {
        case CountMode::Lzc:
            ctx.loc_oracle = false;
            ctx.pad_mode = PadMode::Lzc;
            break;
        case CountMode::Loc:
            ctx.loc_oracle = true;
            ctx.pad_mode = PadMode::Loc;
            break;
        case CountMode::Reconfigurable:
            ctx.loc_oracle = mode_bit == 0;
            ctx.pad_mode = mode_bit == 0 ? PadMode::Loc : PadMode::Lzc;
            break;
    }
    return ctx;
}

using BitVec = std::vector<std::uint8_t>;  // bits[k] = bit k, LSB first

std::uint32_t scan_count(const BitVec& bits, bool loc_oracle) {
    const auto m = static_cast<std::uint32_t>(bits.size());
    for (std::uint32_t k = 0; k < m; ++k) {
        const bool one = bits[m - 1 - k] != 0;
        if (loc_oracle ? !one : one) return k;
    }
    return m;
}

std::string render_input(const BitVec& bits) {
    if (bits.size() <= 64) {
        std::uint64_t v = 0;
        for (std::size_t k = bits.size(); k-- > 0;) v = v << 1 | bits[k];
        return std::to_string(v);
    }
    std::string s;
    for (std::size_t k = bits.size(); k-- > 0;) s += bits[k] ? '1' : '0';
    return "0b" + s;
}

// Width-agnostic sweep: `fill` produces the logical input bits for one lane.
VerificationReport sweep(const SweepContext& ctx, std::uint64_t total,
                         const std::function<void(std::uint64_t, BitVec&)>& fill) {
    const Circuit& c = ctx.circuit;
    VerificationReport rep;
    rep.design = design_name(ctx.design);
    rep.m_logical = ctx.m_logical;
    rep.m_built = c.input_width();
    rep.oracle = ctx.loc_oracle ? "loc" : "lzc";
    rep.mode_bit = ctx.mode_bit;

    std::vector<QubitId> tracked;  // ancilla-evidence targets
    for (QubitId q = 0; q < c.qubit_count(); ++q) {
        const auto role = c.role_of(q);
        if (role != RegisterRole::Input && role != RegisterRole::Output &&
            role != RegisterRole::Mode) {
            tracked.push_back(q);
        }
    }
    std::vector<std::uint64_t> ever_nonzero(tracked.size(), 0);
    const std::vector<QubitId> reusable = c.qubits_with_role(RegisterRole::AncillaReusable);
    const std::uint32_t shift = c.input_width() - ctx.m_logical;

    WordState st;
    st.q.resize(c.qubit_count());
    std::array<BitVec, 64> lane_bits;
    std::array<std::uint32_t, 64> expected{};

    for (std::uint64_t base = 0; base < total; base += 64) {
        const auto lanes = static_cast<std::uint32_t>(std::min<std::uint64_t>(64, total - base));
        st.active = lanes == 64 ? ~0ull : (1ull << lanes) - 1;
        st.violation = 0;
        st.first_bad_gate = SIZE_MAX;
        std::fill(st.q.begin(), st.q.end(), 0ull);

        for (std::uint32_t j = 0; j < lanes; ++j) {
            lane_bits[j].assign(ctx.m_logical, 0);
            fill(base + j, lane_bits[j]);
            expected[j] = scan_count(lane_bits[j], ctx.loc_oracle);
        }
        for (std::uint32_t bit = 0; bit < c.input_width(); ++bit) {
            std::uint64_t w = 0;
            if (bit < shift) {
                // Zeros appended at the LSB end preserve the leading-zero
                // count; ones preserve the leading-one count.
                w = ctx.pad_mode == PadMode::Loc ? st.active : 0;
            } else {
                for (std::uint32_t j = 0; j < lanes; ++j) {
                    w |= static_cast<std::uint64_t>(lane_bits[j][bit - shift]) << j;
                }
            }
            st.q[c.input_msb_first()[c.input_width() - 1 - bit]] = w;
        }
        if (c.mode_qubit()) st.q[*c.mode_qubit()] = ctx.mode_bit == 1 ? ~0ull : 0ull;

        const std::vector<std::uint64_t> initial = st.q;
        run_words(c, st);

        std::uint64_t bad = st.violation;
        for (QubitId q : c.input_msb_first()) bad |= (st.q[q] ^ initial[q]) & st.active;
        if (c.mode_qubit()) bad |= (st.q[*c.mode_qubit()] ^ initial[*c.mode_qubit()]) & st.active;
        for (QubitId q : reusable) bad |= st.q[q] & st.active;

        for (std::uint32_t j = 0; j < lanes; ++j) {
            auto got = static_cast<std::uint32_t>(register_value(st, c.output_msb_first(), j));
            got = std::min(got, ctx.m_logical);  // padded all-zero/all-one clamp
            if (got != expected[j]) bad |= 1ull << j;
        }
        bad &= st.active;

        for (std::size_t k = 0; k < tracked.size(); ++k) {
            ever_nonzero[k] |= st.q[tracked[k]] & st.active;
        }

        rep.cases += lanes;
        if (bad) {
            rep.failures += static_cast<std::uint64_t>(std::popcount(bad));
            if (rep.first_counterexample.empty()) {
                const auto lane = static_cast<std::uint32_t>(std::countr_zero(bad));
                const auto got = static_cast<std::uint32_t>(
                    register_value(st, c.output_msb_first(), lane));
                std::ostringstream os;
                os << "x=" << render_input(lane_bits[lane]) << " got="
                   << std::min(got, ctx.m_logical) << " expected=" << expected[lane];
                if (st.violation >> lane & 1) os << " (T-AND contract violated)";
                rep.first_counterexample = os.str();
            }
        }
    }
    for (std::size_t k = 0; k < tracked.size(); ++k) {
        rep.ancilla_ever_nonzero.emplace_back(tracked[k], ever_nonzero[k] != 0);
    }
    return rep;
}

void bits_from_u64(std::uint64_t x, BitVec& bits) {
    for (std::size_t k = 0; k < bits.size() && k < 64; ++k) bits[k] = x >> k & 1;
}

}  // namespace

SimOutcome run_basis(const Circuit& circuit, BitWord input, int mode_bit) {
    if (input.width != circuit.input_width()) {
        throw ShapeError("input width does not match the circuit's input register");
    }
    if (circuit.mode_qubit() && mode_bit != 0 && mode_bit != 1) {
        throw DomainError("this circuit needs a mode bit of 0 or 1");
    }
    std::vector<std::uint64_t> bits(circuit.qubit_count(), 0);
    for (std::uint32_t bit = 0; bit < input.width; ++bit) {
        bits[circuit.input_msb_first()[input.width - 1 - bit]] = input.bit(bit) ? 1 : 0;
    }
    if (circuit.mode_qubit()) bits[*circuit.mode_qubit()] = mode_bit == 1 ? 1 : 0;

    std::vector<std::string> violations;
    const auto& gates = circuit.gates();
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        const Gate& g = gates[gi];
        switch (g.kind) {
            case GateKind::X: bits[g.targets[0]] ^= 1; break;
            case GateKind::CX: bits[g.targets[0]] ^= bits[g.controls[0]]; break;
            case GateKind::CCX:
                bits[g.targets[0]] ^= bits[g.controls[0]] & bits[g.controls[1]];
                break;
            case GateKind::MCX: {
                std::uint64_t all = 1;
                for (QubitId cq : g.controls) all &= bits[cq];
                bits[g.targets[0]] ^= all;
                break;
            }
            case GateKind::TAndCompute:
                if (bits[g.targets[0]]) {
                    violations.push_back("gate " + std::to_string(gi) +
                                         ": T-AND target not |0> before compute");
                }
                bits[g.targets[0]] = bits[g.controls[0]] & bits[g.controls[1]];
                break;
            case GateKind::TAndUncompute:
                if (bits[g.targets[0]] != (bits[g.controls[0]] & bits[g.controls[1]])) {
                    violations.push_back("gate " + std::to_string(gi) +
                                         ": T-AND target does not hold AND(controls)");
                }
                bits[g.targets[0]] = 0;
                break;
            default:
                throw WrongLevelError(std::string("gate ") + gate_kind_name(g.kind) +
                                      " is not a macro-level classical gate");
        }
    }
    SimOutcome out;
    std::uint64_t in_after = 0;
    for (QubitId q : circuit.input_msb_first()) in_after = in_after << 1 | bits[q];
    out.input_after = BitWord{in_after, circuit.input_width()};
    std::uint64_t gamma = 0;
    for (QubitId q : circuit.output_msb_first()) gamma = gamma << 1 | bits[q];
    out.gamma = static_cast<std::uint32_t>(gamma);
    if (circuit.mode_qubit()) out.mode_after = static_cast<int>(bits[*circuit.mode_qubit()]);
    for (QubitId q = 0; q < circuit.qubit_count(); ++q) {
        const auto role = circuit.role_of(q);
        if (role != RegisterRole::Input && role != RegisterRole::Output &&
            role != RegisterRole::Mode) {
            out.ancilla_final.emplace_back(q, static_cast<int>(bits[q]));
        }
    }
    out.violations = std::move(violations);
    return out;
}

std::uint32_t oracle_count(DesignId design, BitWord x, int mode_bit) {
    switch (design_mode(design)) {
        case CountMode::Lzc: return lzc(x);
        case CountMode::Loc: return loc(x);
        case CountMode::Reconfigurable:
            if (mode_bit != 0 && mode_bit != 1) {
                throw DomainError("the reconfigurable design needs a mode bit of 0 or 1");
            }
            return mode_bit == 1 ? lzc(x) : loc(x);
    }
    throw Error("unknown mode");
}

VerificationReport verify_exhaustive(DesignId design, std::uint32_t m, int mode_bit) {
    if (m > 20) throw CapacityError("exhaustive sweeps are limited to m <= 20");
    auto ctx = make_context(design, m, mode_bit);
    return sweep(ctx, 1ull << m, bits_from_u64);
}

VerificationReport verify_sampled(DesignId design, std::uint32_t m, std::uint64_t samples,
                                  std::uint64_t seed, int mode_bit) {
    auto ctx = make_context(design, m, mode_bit);
    std::mt19937_64 rng(seed);
    // One word per exact count value, then uniform words; uniform sampling
    // alone almost never reaches deep prefixes.
    std::vector<BitVec> inputs;
    inputs.reserve(samples);
    for (std::uint32_t k = 0; k <= m && inputs.size() < samples; ++k) {
        BitVec bits(m, 0);
        if (k < m) {
            bits[m - 1 - k] = 1;
            for (std::uint32_t j = 0; j + k + 1 < m; ++j) bits[j] = rng() & 1;
        }
        if (ctx.loc_oracle) {
            for (auto& b : bits) b ^= 1;
        }
        inputs.push_back(std::move(bits));
    }
    while (inputs.size() < samples) {
        BitVec bits(m, 0);
        for (auto& b : bits) b = rng() & 1;
        inputs.push_back(std::move(bits));
    }
    return sweep(ctx, inputs.size(),
                 [&](std::uint64_t lane, BitVec& out) { out = inputs[lane]; });
}

VerificationReport verify_vectors(DesignId design, std::uint32_t m,
                                  const std::vector<std::uint64_t>& inputs, int mode_bit) {
    if (m > 64) throw CapacityError("explicit vectors are limited to m <= 64");
    auto ctx = make_context(design, m, mode_bit);
    return sweep(ctx, inputs.size(), [&](std::uint64_t lane, BitVec& out) {
        if (m < 64 && inputs[lane] >> m) throw DomainError("vector does not fit the width");
        bits_from_u64(inputs[lane], out);
    });
}

std::string serialize_report(const VerificationReport& rep) {
    std::ostringstream os;
    os << "report: verify\n";
    os << "design: " << rep.design << "\n";
    os << "m: " << rep.m_logical << "\n";
    if (rep.padded()) os << "m_built: " << rep.m_built << "\n";
    os << "oracle: " << rep.oracle << "\n";
    if (rep.mode_bit >= 0) os << "mode_bit: " << rep.mode_bit << "\n";
    os << "cases: " << rep.cases << "\n";
    os << "failures: " << rep.failures << "\n";
    os << "result: " << (rep.pass() ? "pass" : "fail") << "\n";
    os << "counterexample: "
       << (rep.first_counterexample.empty() ? "none" : rep.first_counterexample) << "\n";
    return os.str();
}

}  // namespace qlzoc
