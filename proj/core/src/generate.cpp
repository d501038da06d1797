#include "qlzoc/generate.hpp"

#include <bit>

#include "qlzoc/decompose.hpp"

namespace qlzoc {

std::string design_name(DesignId design) {
    switch (design) {
        case DesignId::Qloc: return "qloc";
        case DesignId::Qlzc: return "qlzc";
        case DesignId::TaOpQloc: return "ta-op-qloc";
        case DesignId::TaOpQlzc: return "ta-op-qlzc";
        case DesignId::POp4Qlzc: return "p-op-4qlzc";
        case DesignId::TaPOp4Qlzc: return "ta-p-op-4qlzc";
        case DesignId::TaOpPqlzc: return "ta-op-pqlzc";
        case DesignId::FoTaOpPqlzc: return "fo-ta-op-pqlzc";
        case DesignId::TaOpPqloc: return "ta-op-pqloc";
        case DesignId::FoTaOpPqloc: return "fo-ta-op-pqloc";
        case DesignId::ReconfigurableQlzoc: return "reconfigurable";
    }
    return "?";
}

std::optional<DesignId> parse_design(const std::string& name) {
    for (DesignId d : kAllDesigns) {
        if (design_name(d) == name) return d;
    }
    // Shorthand aliases.
    if (name == "pqlzc") return DesignId::TaOpPqlzc;
    if (name == "fo-pqlzc") return DesignId::FoTaOpPqlzc;
    if (name == "pqloc") return DesignId::TaOpPqloc;
    if (name == "fo-pqloc") return DesignId::FoTaOpPqloc;
    if (name == "reconfigurable-qlzoc" || name == "qlzoc") return DesignId::ReconfigurableQlzoc;
    return std::nullopt;
}

CountMode design_mode(DesignId design) {
    switch (design) {
        case DesignId::Qloc:
        case DesignId::TaOpQloc:
        case DesignId::TaOpPqloc:
        case DesignId::FoTaOpPqloc: return CountMode::Loc;
        case DesignId::ReconfigurableQlzoc: return CountMode::Reconfigurable;
        default: return CountMode::Lzc;
    }
}

bool design_uses_tand(DesignId design) {
    switch (design) {
        case DesignId::Qloc:
        case DesignId::Qlzc:
        case DesignId::POp4Qlzc: return false;
        default: return true;
    }
}

bool design_is_parallel(DesignId design) {
    switch (design) {
        case DesignId::TaOpPqlzc:
        case DesignId::FoTaOpPqlzc:
        case DesignId::TaOpPqloc:
        case DesignId::FoTaOpPqloc: return true;
        default: return false;
    }
}

bool design_uses_fanout(DesignId design) {
    return design == DesignId::FoTaOpPqlzc || design == DesignId::FoTaOpPqloc;
}

bool design_width_ok(DesignId design, std::uint32_t m) {
    if (m == 0) return false;
    if (design == DesignId::POp4Qlzc || design == DesignId::TaPOp4Qlzc) return m == 4;
    if (design_is_parallel(design)) return m >= 8 && std::has_single_bit(m);
    return true;
}

std::uint32_t native_parallel_width(std::uint32_t m) {
    std::uint32_t w = 8;
    while (w < m) w <<= 1;
    return w;
}

namespace {

// Complement layer: X for dedicated LZC designs, CX from the mode qubit for
// the reconfigurable variant, nothing for LOC.
void emit_complement_layer(CircuitBuilder& b, const std::vector<QubitId>& inputs_msb_first,
                           CountMode mode) {
    if (mode == CountMode::Loc) return;
    for (QubitId q : inputs_msb_first) {
        if (mode == CountMode::Lzc) {
            b.append(Gate::x(q));
        } else {
            b.append(Gate::cx(*b.mode_qubit(), q));
        }
    }
}

// Sequential counter. One flag ancilla per stage: the
// stage-1 flag is a plain CX copy of the MSB, stage i >= 2 flags extend the
// ladder by one CCX / T-AND. Flags are uncomputed in reverse, so every
// ancilla is reusable.
Circuit build_sequential(DesignId design, std::uint32_t m) {
    const CountMode mode = design_mode(design);
    const bool tand = design_uses_tand(design);
    CircuitBuilder b(design_name(design), m, mode);
    if (mode == CountMode::Reconfigurable) b.add_mode_qubit();

    emit_complement_layer(b, b.input_msb_first(), mode);

    std::vector<QubitId> flags;
    const QubitId an1 = b.alloc_ancilla(RegisterRole::AncillaReusable);
    b.append(Gate::cx(b.input(m - 1), an1));
    flags.push_back(an1);
    b.append(Gate::cx(an1, b.output(0)));

    for (std::uint32_t i = 2; i <= m; ++i) {
        const QubitId an = b.alloc_ancilla(RegisterRole::AncillaReusable);
        const QubitId xin = b.input(m - i);
        b.append(tand ? Gate::tand_compute(xin, flags[i - 2], an)
                      : Gate::ccx(xin, flags[i - 2], an));
        flags.push_back(an);
        const auto fm = flip_mask(i);
        for (std::uint32_t j = 0; j < fm.n; ++j) b.append(Gate::cx(an, b.output(j)));
    }
    for (std::uint32_t i = m; i >= 2; --i) {
        const QubitId xin = b.input(m - i);
        b.append(tand ? Gate::tand_uncompute(xin, flags[i - 2], flags[i - 1])
                      : Gate::ccx(xin, flags[i - 2], flags[i - 1]));
    }
    b.append(Gate::cx(b.input(m - 1), an1));

    emit_complement_layer(b, b.input_msb_first(), mode);
    return b.finish();
}

// The 4-qubit power-of-two-optimized core. gamma_1 and
// gamma_2 store the i = 2 and i = 4 all-one flags in place; one ancilla
// carries the i = 3 flag. The i = 3 flag uncompute must precede the i = 4
// flips: those flips hit gamma_1, a control of the uncompute.
QubitId emit_pop4_core(CircuitBuilder& b, const std::vector<QubitId>& x_msb_first,
                       const std::vector<QubitId>& gamma_msb_first, bool tand) {
    const QubitId x3 = x_msb_first[0], x2 = x_msb_first[1], x1 = x_msb_first[2],
                  x0 = x_msb_first[3];
    const QubitId g2 = gamma_msb_first[0], g1 = gamma_msb_first[1], g0 = gamma_msb_first[2];
    const QubitId an = b.alloc_ancilla(RegisterRole::AncillaReusable);

    auto and_into = [&](QubitId c0, QubitId c1, QubitId t) {
        b.append(tand ? Gate::tand_compute(c0, c1, t) : Gate::ccx(c0, c1, t));
    };
    b.append(Gate::cx(x3, g0));  // i = 1
    and_into(x3, x2, g1);        // i = 2, in place
    b.append(Gate::cx(g1, g0));
    and_into(x1, g1, an);  // i = 3 flag
    b.append(Gate::cx(an, g0));
    and_into(x0, an, g2);  // i = 4, in place via the i = 3 flag
    b.append(tand ? Gate::tand_uncompute(x1, g1, an) : Gate::ccx(x1, g1, an));
    b.append(Gate::cx(g2, g1));
    b.append(Gate::cx(g2, g0));
    return an;
}

Circuit build_pop4(DesignId design, std::uint32_t m) {
    if (m != 4) throw VariantMismatchError("the power-of-two optimized block is fixed at m = 4");
    CircuitBuilder b(design_name(design), 4, CountMode::Lzc);
    emit_complement_layer(b, b.input_msb_first(), CountMode::Lzc);
    emit_pop4_core(b, b.input_msb_first(), b.output_msb_first(),
                   design == DesignId::TaPOp4Qlzc);
    emit_complement_layer(b, b.input_msb_first(), CountMode::Lzc);
    return b.finish();
}

// Pairwise merge of two counter output registers (both MSB first, equal
// width w). Emits the w-1 selection CCX gates, then the T-AND producing the
// new top flag, then the CX fixing the old top bit. With fan-out, the shared
// control is copied so the selection gates act on disjoint qubits; the
// copies are uncomputed before the final CX changes the control.
std::vector<QubitId> emit_merge(CircuitBuilder& b, const std::vector<QubitId>& high,
                                const std::vector<QubitId>& low, QubitId new_msb, bool fanout,
                                std::vector<QubitId>* round_copies) {
    const std::size_t w = high.size();
    const QubitId ctrl = high[0];
    std::vector<QubitId> copies;
    std::vector<Gate> fo;
    if (fanout) {
        for (std::size_t k = 0; k + 1 < w; ++k) {
            copies.push_back(b.alloc_ancilla(RegisterRole::AncillaReusable));
        }
        fo = build_fanout(ctrl, copies);
        for (const Gate& g : fo) b.append(g);
    }
    for (std::size_t bit = 0; bit + 1 < w; ++bit) {
        const QubitId c = fanout ? copies[bit] : ctrl;
        b.append(Gate::ccx(c, low[w - 1 - bit], high[w - 1 - bit]));
    }
    b.append(Gate::tand_compute(ctrl, low[0], new_msb));
    if (fanout) {
        for (std::size_t k = fo.size(); k-- > 0;) b.append(fo[k]);
        // Copies go back to the pool only once the whole round is emitted:
        // groups of one round run in parallel and need disjoint copies.
        round_copies->insert(round_copies->end(), copies.begin(), copies.end());
    }
    b.append(Gate::cx(new_msb, ctrl));

    std::vector<QubitId> merged;
    merged.push_back(new_msb);
    merged.insert(merged.end(), high.begin(), high.end());
    return merged;
}

// Parallel counter: a tree of 4-qubit TA-P-OP leaves merged pairwise. The
// most-significant path carries the pre-registered output qubits; every
// merged-away register is garbage.
Circuit build_parallel(DesignId design, std::uint32_t m) {
    if (!design_width_ok(design, m) || m % 4 != 0) {
        throw ShapeError("parallel designs natively support m = 4 * 2^p with p >= 1");
    }
    const CountMode mode = design_mode(design);
    const bool fanout = design_uses_fanout(design);
    CircuitBuilder b(design_name(design), m, mode);
    const std::uint32_t n_leaves = m / 4;
    std::uint32_t next_output_bit = 3;  // bits 0..2 belong to leaf 0

    std::vector<std::vector<QubitId>> counters;
    for (std::uint32_t leaf = 0; leaf < n_leaves; ++leaf) {
        std::vector<QubitId> x;  // MSB first
        for (std::uint32_t k = 0; k < 4; ++k) x.push_back(b.input(m - 1 - 4 * leaf - k));
        std::vector<QubitId> gamma;
        if (leaf == 0) {
            gamma = {b.output(2), b.output(1), b.output(0)};
        } else {
            for (int k = 0; k < 3; ++k) {
                gamma.push_back(b.alloc_ancilla(RegisterRole::AncillaGarbage));
            }
        }
        if (mode == CountMode::Lzc) {
            for (QubitId q : x) b.append(Gate::x(q));
        }
        emit_pop4_core(b, x, gamma, true);
        if (mode == CountMode::Lzc) {
            for (QubitId q : x) b.append(Gate::x(q));
        }
        counters.push_back(std::move(gamma));
    }

    while (counters.size() > 1) {
        std::vector<std::vector<QubitId>> next;
        std::vector<QubitId> round_copies;
        for (std::size_t g = 0; g * 2 < counters.size(); ++g) {
            const QubitId new_msb = g == 0 ? b.output(next_output_bit)
                                           : b.alloc_ancilla(RegisterRole::AncillaGarbage);
            next.push_back(emit_merge(b, counters[2 * g], counters[2 * g + 1], new_msb, fanout,
                                      &round_copies));
        }
        for (std::size_t k = round_copies.size(); k-- > 0;) b.release_ancilla(round_copies[k]);
        ++next_output_bit;
        counters = std::move(next);
    }
    return b.finish();
}

}  // namespace

Circuit build_design(DesignId design, std::uint32_t m) {
    if (m == 0) throw InvalidWidthError("counter width must be positive");
    switch (design) {
        case DesignId::Qloc:
        case DesignId::Qlzc:
        case DesignId::TaOpQloc:
        case DesignId::TaOpQlzc:
        case DesignId::ReconfigurableQlzoc: return build_sequential(design, m);
        case DesignId::POp4Qlzc:
        case DesignId::TaPOp4Qlzc: return build_pop4(design, m);
        case DesignId::TaOpPqlzc:
        case DesignId::FoTaOpPqlzc:
        case DesignId::TaOpPqloc:
        case DesignId::FoTaOpPqloc: return build_parallel(design, m);
    }
    throw Error("unknown design");
}

IMcxnSpec IMcxnSpec::make(std::uint64_t i, Variant variant) {
    const auto fm = flip_mask(i);  // throws DomainError on i == 0
    if (variant == Variant::PowerOfTwoInPlace && !std::has_single_bit(i)) {
        throw VariantMismatchError("the in-place variant requires i = 2^p");
    }
    IMcxnSpec spec;
    spec.i = i;
    spec.n = fm.n;
    spec.variant = variant;
    return spec;
}

void append_imcxn(CircuitBuilder& builder, const IMcxnSpec& spec,
                  const std::vector<QubitId>& controls,
                  const std::vector<QubitId>& gamma_lsb_first) {
    if (controls.size() != spec.i) {
        throw VariantMismatchError("i-MCXn expects exactly i controls");
    }
    if (spec.n != flip_mask(spec.i).n) throw VariantMismatchError("inconsistent i-MCXn spec");
    if (gamma_lsb_first.size() < spec.n) {
        throw ShapeError("target register narrower than the flip count");
    }
    auto mcx_onto = [&](QubitId t) {
        Gate g = Gate::mcx(controls, t);
        if (g.kind == GateKind::MCX) {
            append_mcx_ladder(builder, g.controls, t);
        } else {
            builder.append(std::move(g));
        }
    };
    switch (spec.variant) {
        case IMcxnSpec::Variant::Original: {
            for (std::uint32_t j = 0; j < spec.n; ++j) {
                builder.append(Gate::mcx(controls, gamma_lsb_first[j]));
            }
            break;
        }
        case IMcxnSpec::Variant::AncillaAssisted: {
            const QubitId an = builder.alloc_ancilla(RegisterRole::AncillaReusable);
            mcx_onto(an);
            for (std::uint32_t j = 0; j < spec.n; ++j) {
                builder.append(Gate::cx(an, gamma_lsb_first[j]));
            }
            mcx_onto(an);
            builder.release_ancilla(an);
            break;
        }
        case IMcxnSpec::Variant::PowerOfTwoInPlace: {
            if (!std::has_single_bit(spec.i)) {
                throw VariantMismatchError("the in-place variant requires i = 2^p");
            }
            const std::uint32_t p = spec.n - 1;
            builder.append(Gate::mcx(controls, gamma_lsb_first[p]));
            for (std::uint32_t j = 0; j < p; ++j) {
                builder.append(Gate::cx(gamma_lsb_first[p], gamma_lsb_first[j]));
            }
            break;
        }
    }
}

std::vector<Gate> build_fanout(QubitId ctrl, const std::vector<QubitId>& ancillas) {
    const std::size_t n = ancillas.size();
    std::vector<QubitId> q;  // q[0] = ctrl, q[k] = ancilla k-1
    q.push_back(ctrl);
    q.insert(q.end(), ancillas.begin(), ancillas.end());
    std::vector<Gate> gates;
    for (std::size_t round = 0; (1ull << round) <= n; ++round) {
        for (std::size_t j = 0; j < (1ull << round); ++j) {
            if (j + (1ull << round) <= n) {
                gates.push_back(Gate::cx(q[j], q[j + (1ull << round)]));
            }
        }
    }
    return gates;
}

BitWord pad_input(BitWord x, std::uint32_t m_native, PadMode mode) {
    if (x.width > m_native) throw ShapeError("input wider than the native circuit width");
    const std::uint32_t shift = m_native - x.width;
    std::uint64_t value = shift >= 64 ? 0 : x.value << shift;
    if (mode == PadMode::Loc) {
        value |= shift >= 64 ? ~0ull : (1ull << shift) - 1;
    }
    return BitWord{value, m_native};
}

}  // namespace qlzoc
