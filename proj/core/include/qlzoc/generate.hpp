#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlzoc/circuit.hpp"
#include "qlzoc/oracle.hpp"

namespace qlzoc {

enum class DesignId {
    Qloc,
    Qlzc,
    TaOpQloc,
    TaOpQlzc,
    POp4Qlzc,
    TaPOp4Qlzc,
    TaOpPqlzc,
    FoTaOpPqlzc,
    TaOpPqloc,
    FoTaOpPqloc,
    ReconfigurableQlzoc,
};

constexpr DesignId kAllDesigns[] = {
    DesignId::Qloc,        DesignId::Qlzc,        DesignId::TaOpQloc,
    DesignId::TaOpQlzc,    DesignId::POp4Qlzc,    DesignId::TaPOp4Qlzc,
    DesignId::TaOpPqlzc,   DesignId::FoTaOpPqlzc, DesignId::TaOpPqloc,
    DesignId::FoTaOpPqloc, DesignId::ReconfigurableQlzoc,
};

std::string design_name(DesignId design);
std::optional<DesignId> parse_design(const std::string& name);

CountMode design_mode(DesignId design);
bool design_uses_tand(DesignId design);
bool design_is_parallel(DesignId design);
bool design_uses_fanout(DesignId design);

/// True when the design can be built natively at width m.
bool design_width_ok(DesignId design, std::uint32_t m);

/// Smallest natively supported parallel width >= m (4 * 2^p, p >= 1).
std::uint32_t native_parallel_width(std::uint32_t m);

/// Builds the named design at native width m. Throws ShapeError /
/// VariantMismatchError when the width is unsupported.
Circuit build_design(DesignId design, std::uint32_t m);

// --- building blocks, exposed for direct testing ---

struct IMcxnSpec {
    enum class Variant { Original, AncillaAssisted, PowerOfTwoInPlace };

    std::uint64_t i = 0;  // stage index, 1-based
    std::uint32_t n = 0;  // LSB flip count, i mod 2^n == 2^(n-1)
    Variant variant = Variant::Original;

    static IMcxnSpec make(std::uint64_t i, Variant variant);
};

/// Appends one i-MCXn stage: flips gamma bits 0..n-1 when all controls are 1.
/// `controls` are the i most-significant input qubits; `gamma_lsb_first`
/// must cover at least n qubits.
void append_imcxn(CircuitBuilder& builder, const IMcxnSpec& spec,
                  const std::vector<QubitId>& controls,
                  const std::vector<QubitId>& gamma_lsb_first);

/// Binary-tree fan-out: copies `ctrl` onto every ancilla (all |0>) with
/// CX-layer depth ceil(lg(n+1)). Returns the gate list; the reversed list is
/// the inverse.
std::vector<Gate> build_fanout(QubitId ctrl, const std::vector<QubitId>& ancillas);

enum class PadMode { Lzc, Loc };

/// Widens x to m_native: zeros appended at the LSB end for Lzc (preserves
/// lzc), ones for Loc (preserves loc). Counts reported by a padded circuit
/// must be clamped to min(count, x.width).
BitWord pad_input(BitWord x, std::uint32_t m_native, PadMode mode);

}  // namespace qlzoc
