// qlzoc: generate, verify, analyze, compare, emit, and sweep quantum
// leading-zero/one counter circuits.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlzoc/analyze.hpp"
#include "qlzoc/bitsim.hpp"
#include "qlzoc/circuit_io.hpp"
#include "qlzoc/fixtures.hpp"

using namespace qlzoc;

namespace {

constexpr std::uint64_t kDefaultSeed = 20250808;

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw Error("cannot open output file " + path);
    os << text;
}

DesignId need_design(const std::string& name) {
    const auto d = parse_design(name);
    if (!d) throw CLI::ValidationError("--design", "unknown design '" + name + "'");
    return *d;
}

struct GenerateOpts {
    std::string design;
    std::uint32_t m = 0;
    bool pad = false;
    std::string out;
    std::string expand = "macro";
    std::string ccx_style = "amy";
};

DecompositionPolicy policy_from(const std::string& ccx_style) {
    DecompositionPolicy policy;
    if (ccx_style == "jones") {
        policy.ccx_style = CcxStyle::JonesMeasurement;
    } else if (ccx_style != "amy") {
        throw CLI::ValidationError("--ccx-style", "takes amy|jones");
    }
    return policy;
}

int cmd_generate(const GenerateOpts& o) {
    const DesignId d = need_design(o.design);
    std::uint32_t m_built = o.m;
    if (!design_width_ok(d, o.m)) {
        if (design_is_parallel(d) && o.pad) {
            m_built = native_parallel_width(o.m);
        } else if (design_is_parallel(d)) {
            std::cerr << "error: " << o.design << " natively supports m = 8, 16, 32, ...;"
                      << " rerun with --pad to build the next native width\n";
            return 2;
        } else {
            std::cerr << "error: design " << o.design << " cannot be built at m = " << o.m
                      << "\n";
            return 2;
        }
    }
    const Circuit c = build_design(d, m_built);
    Circuit emitted = c;
    const DecompositionPolicy policy = policy_from(o.ccx_style);
    if (o.expand == "ccx") {
        emitted = expand_circuit(c, policy, ExpandLevel::CcxOnly);
    } else if (o.expand == "clifford-t") {
        emitted = expand_circuit(c, policy, ExpandLevel::CliffordT);
    } else if (o.expand != "macro") {
        std::cerr << "error: --expand takes macro|ccx|clifford-t\n";
        return 2;
    }
    std::ostringstream os;
    os << "# design " << design_name(d) << "\n";
    os << "# m " << m_built;
    if (m_built != o.m) os << " (requested " << o.m << ", padded)";
    os << "\n# level " << o.expand << "\n";
    os << "# gates " << emitted.gates().size() << "\n";
    os << serialize_circuit(emitted);
    write_out(o.out, os.str());
    return 0;
}

struct VerifyOpts {
    std::string design;
    std::uint32_t m = 0;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::uint64_t> vector_x;
    int mode_bit = -1;
    std::string out;
};

int cmd_verify(const VerifyOpts& o) {
    const DesignId d = need_design(o.design);
    VerificationReport rep;
    if (o.vector_x) {
        rep = verify_vectors(d, o.m, {*o.vector_x}, o.mode_bit);
    } else if (o.exhaustive || o.samples == 0) {
        rep = verify_exhaustive(d, o.m, o.mode_bit);
    } else {
        rep = verify_sampled(d, o.m, o.samples, o.seed, o.mode_bit);
    }
    std::string text = serialize_report(rep);
    // Built-in published vectors matching this design family and width ride
    // along in every verify report.
    const bool loc_family = rep.oracle == "loc";
    const auto& table = loc_family ? loc_vectors() : lzc_vectors();
    const auto& designs = loc_family ? loc_vector_designs() : lzc_vector_designs();
    for (const PublishedVector& v : table) {
        if (v.n != o.m) continue;
        if (std::find(designs.begin(), designs.end(), d) == designs.end()) continue;
        const auto vrep = verify_vectors(d, v.n, {v.x}, o.mode_bit);
        text += "builtin_vector n=" + std::to_string(v.n) + " x=" + std::to_string(v.x) +
                " expected=" + std::to_string(v.expected) +
                " result=" + (vrep.pass() ? "pass" : "fail") + "\n";
    }
    if (o.vector_x) {
        const auto out = run_basis(build_design(d, rep.m_built),
                                   pad_input(BitWord{*o.vector_x, o.m}, rep.m_built,
                                             rep.oracle == "loc" ? PadMode::Loc : PadMode::Lzc),
                                   o.mode_bit);
        text += "gamma: " + std::to_string(std::min(out.gamma, o.m)) + "\n";
    }
    write_out(o.out, text);
    return rep.pass() ? 0 : 1;
}

struct AnalyzeOpts {
    std::string design;
    std::uint32_t m = 0;
    bool strict = false;
    std::string out;
    std::string ccx_style = "amy";
};

int cmd_analyze(const AnalyzeOpts& o, bool with_rows) {
    const DesignId d = need_design(o.design);
    const ResourceReport rep = analyze_design(d, o.m, policy_from(o.ccx_style));
    const auto rows = compare_design(d, o.m, rep);
    std::ostringstream os;
    os << serialize_resource_report(d, o.m, rep);
    if (with_rows) {
        os << format_rows_machine(rows);
        os << format_rows_table(rows);
    }
    write_out(o.out, os.str());
    if (o.strict && !strict_ok(rows)) return 1;
    return 0;
}

struct EmitOpts {
    std::string design;
    std::uint32_t m = 0;
    std::string format = "interchange";
    std::string out;
};

int cmd_emit(const EmitOpts& o) {
    const DesignId d = need_design(o.design);
    if (!design_width_ok(d, o.m)) {
        std::cerr << "error: design " << o.design << " cannot be built at m = " << o.m << "\n";
        return 2;
    }
    const Circuit c = build_design(d, o.m);
    if (o.format == "interchange") {
        write_out(o.out, serialize_circuit(c));
    } else if (o.format == "qasm" || o.format == "qasm-like") {
        write_out(o.out, emit_qasm(c));
    } else {
        std::cerr << "error: --format takes interchange|qasm\n";
        return 2;
    }
    return 0;
}

struct SweepOpts {
    std::vector<std::uint32_t> widths = {4, 8, 16, 32, 64};
    std::string out;
};

int cmd_sweep(const SweepOpts& o) {
    std::ostringstream os;
    bool ok = true;

    os << "== published 4-qubit cost table ==\n";
    for (DesignId d : {DesignId::POp4Qlzc, DesignId::TaPOp4Qlzc, DesignId::TaOpQlzc}) {
        const auto rows = compare_design(d, 4, analyze_design(d, 4));
        os << format_rows_machine(rows);
        ok = ok && strict_ok(rows);
    }
    os << "== published 8-qubit cost table ==\n";
    for (DesignId d : {DesignId::TaOpQlzc, DesignId::TaOpPqlzc, DesignId::FoTaOpPqlzc}) {
        const auto rows = compare_design(d, 8, analyze_design(d, 8));
        os << format_rows_machine(rows);
        ok = ok && strict_ok(rows);
    }

    os << "== cost scaling ==\n";
    for (std::uint32_t m : o.widths) {
        if (m < 2) continue;
        const auto rep = analyze_design(DesignId::TaOpQlzc, m);
        const bool match = rep.t_count == 4 * std::int64_t{m} - 4;
        os << "scaling design=ta-op-qlzc m=" << m << " t_count=" << rep.t_count
           << " formula=" << 4 * std::int64_t{m} - 4 << " status="
           << (match ? "match" : "mismatch") << "\n";
        ok = ok && match;
        if (design_width_ok(DesignId::FoTaOpPqlzc, m)) {
            std::int64_t lg = 0;
            while ((1u << (lg + 1)) <= m) ++lg;
            const auto fo = analyze_design(DesignId::FoTaOpPqlzc, m);
            const bool fo_match = fo.t_depth == 3 * lg - 2;
            os << "scaling design=fo-ta-op-pqlzc m=" << m << " t_depth=" << fo.t_depth
               << " formula=" << 3 * lg - 2 << " status=" << (fo_match ? "match" : "mismatch")
               << "\n";
            ok = ok && fo_match;
        }
    }

    const auto run_vectors = [&](const std::vector<PublishedVector>& vectors,
                                 const std::vector<DesignId>& designs, int mode,
                                 const char* label) {
        os << "== " << label << " ==\n";
        for (const PublishedVector& v : vectors) {
            for (DesignId d : designs) {
                const int mb = design_mode(d) == CountMode::Reconfigurable ? mode : -1;
                const auto rep = verify_vectors(d, v.n, {v.x}, mb);
                os << "vector design=" << design_name(d) << " n=" << v.n << " x=" << v.x
                   << " expected=" << v.expected << " result=" << (rep.pass() ? "pass" : "fail")
                   << "\n";
                ok = ok && rep.pass();
            }
        }
    };
    run_vectors(lzc_vectors(), lzc_vector_designs(), 1, "leading-zero vectors");
    run_vectors(loc_vectors(), loc_vector_designs(), 0, "leading-one vectors");

    os << "== exhaustive verification ==\n";
    for (DesignId d : {DesignId::TaOpQlzc, DesignId::TaOpQloc, DesignId::TaOpPqlzc,
                       DesignId::FoTaOpPqlzc}) {
        const std::uint32_t m = design_is_parallel(d) ? 8 : 10;
        const auto rep = verify_exhaustive(d, m);
        os << "verify design=" << design_name(d) << " m=" << m << " cases=" << rep.cases
           << " result=" << (rep.pass() ? "pass" : "fail") << "\n";
        ok = ok && rep.pass();
    }
    for (int mode : {0, 1}) {
        const auto rep = verify_exhaustive(DesignId::ReconfigurableQlzoc, 8, mode);
        os << "verify design=reconfigurable m=8 mode_bit=" << mode << " cases=" << rep.cases
           << " result=" << (rep.pass() ? "pass" : "fail") << "\n";
        ok = ok && rep.pass();
    }

    os << "result: " << (ok ? "pass" : "fail") << "\n";
    write_out(o.out, os.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum leading-zero/one counter toolkit"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* sc_gen = app.add_subcommand("generate", "build a circuit and write it out");
    sc_gen->add_option("--design", gen.design, "design name")->required();
    sc_gen->add_option("--m", gen.m, "input width")->required();
    sc_gen->add_flag("--pad", gen.pad, "round non-native widths up to the next native width");
    sc_gen->add_option("--out", gen.out, "output file (stdout when omitted)");
    sc_gen->add_option("--expand", gen.expand, "gate level: macro|ccx|clifford-t");
    sc_gen->add_option("--ccx-style", gen.ccx_style, "CCX decomposition: amy|jones");

    VerifyOpts ver;
    auto* sc_ver = app.add_subcommand("verify", "check a design against the reference oracle");
    sc_ver->add_option("--design", ver.design)->required();
    sc_ver->add_option("--m", ver.m)->required();
    sc_ver->add_flag("--exhaustive", ver.exhaustive, "sweep all 2^m inputs");
    sc_ver->add_option("--samples", ver.samples, "stratified sample count for large m");
    sc_ver->add_option("--seed", ver.seed, "sampling seed");
    std::uint64_t vec_value = 0;
    auto* vec_opt = sc_ver->add_option("--vector", vec_value, "verify one input word");
    sc_ver->add_option("--mode-bit", ver.mode_bit, "mode bit for the reconfigurable design");
    sc_ver->add_option("--out", ver.out);

    AnalyzeOpts ana;
    auto* sc_ana = app.add_subcommand("analyze", "resource report for one design");
    sc_ana->add_option("--design", ana.design)->required();
    sc_ana->add_option("--m", ana.m)->required();
    sc_ana->add_option("--ccx-style", ana.ccx_style, "CCX decomposition: amy|jones");
    sc_ana->add_option("--out", ana.out);

    AnalyzeOpts cmp;
    auto* sc_cmp = app.add_subcommand("compare", "compare generated costs with published numbers");
    sc_cmp->add_option("--design", cmp.design)->required();
    sc_cmp->add_option("--m", cmp.m)->required();
    sc_cmp->add_flag("--strict", cmp.strict, "exit 1 when an asserted cell mismatches");
    sc_cmp->add_option("--ccx-style", cmp.ccx_style, "CCX decomposition: amy|jones");
    sc_cmp->add_option("--out", cmp.out);

    EmitOpts emit;
    auto* sc_emit = app.add_subcommand("emit", "write interchange or qasm text");
    sc_emit->add_option("--design", emit.design)->required();
    sc_emit->add_option("--m", emit.m)->required();
    sc_emit->add_option("--format", emit.format, "interchange|qasm");
    sc_emit->add_option("--out", emit.out);

    SweepOpts sweep;
    auto* sc_sweep = app.add_subcommand("sweep", "reproduce every published table in one run");
    sc_sweep->add_option("--m", sweep.widths, "scaling widths")->delimiter(',');
    sc_sweep->add_option("--out", sweep.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc_gen->parsed()) return cmd_generate(gen);
        if (sc_ver->parsed()) {
            if (vec_opt->count() > 0) ver.vector_x = vec_value;
            return cmd_verify(ver);
        }
        if (sc_ana->parsed()) return cmd_analyze(ana, true);
        if (sc_cmp->parsed()) return cmd_analyze(cmp, true);
        if (sc_emit->parsed()) return cmd_emit(emit);
        if (sc_sweep->parsed()) return cmd_sweep(sweep);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const VariantMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidWidthError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
