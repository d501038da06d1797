#include "qlzoc/circuit_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace qlzoc {

namespace {

std::string join_ids(const std::vector<QubitId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ids[i]);
    }
    return out;
}

std::vector<QubitId> split_ids(const std::string& s) {
    std::vector<QubitId> ids;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        if (cur.empty()) throw FormatError("empty id in list");
        ids.push_back(static_cast<QubitId>(std::stoul(cur)));
    }
    return ids;
}

std::optional<GateKind> kind_from_name(const std::string& name) {
    for (GateKind k :
         {GateKind::X, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg,
          GateKind::CX, GateKind::CZ, GateKind::CCX, GateKind::MCX, GateKind::TAndCompute,
          GateKind::TAndUncompute, GateKind::Measure, GateKind::CzIf, GateKind::XIf}) {
        if (name == gate_kind_name(k)) return k;
    }
    return std::nullopt;
}

std::optional<CountMode> mode_from_name(const std::string& name) {
    for (CountMode m : {CountMode::Loc, CountMode::Lzc, CountMode::Reconfigurable}) {
        if (name == count_mode_name(m)) return m;
    }
    return std::nullopt;
}

}  // namespace

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream os;
    os << "qlzoc-circuit v1\n";
    os << "name " << c.name() << "\n";
    os << "m " << c.input_width() << "\n";
    os << "mode " << count_mode_name(c.mode()) << "\n";
    os << "qubits " << c.qubit_count() << "\n";
    os << "cbits " << c.classical_bit_count() << "\n";
    os << "register input " << join_ids(c.input_msb_first()) << "\n";
    os << "register output " << join_ids(c.output_msb_first()) << "\n";
    if (c.mode_qubit()) os << "register mode " << *c.mode_qubit() << "\n";
    for (RegisterRole role : {RegisterRole::AncillaReusable, RegisterRole::AncillaGarbage,
                              RegisterRole::TStateResource}) {
        const auto ids = c.qubits_with_role(role);
        if (!ids.empty()) os << "ancilla " << register_role_name(role) << " " << join_ids(ids) << "\n";
    }
    os << "gates " << c.gates().size() << "\n";
    for (const Gate& g : c.gates()) {
        os << gate_kind_name(g.kind);
        if (!g.controls.empty()) os << " c:" << join_ids(g.controls);
        if (!g.targets.empty()) os << " t:" << join_ids(g.targets);
        if (g.cbit >= 0) os << " b:" << g.cbit;
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string name;
    std::uint32_t m = 0, qubits = 0, cbits = 0;
    CountMode mode = CountMode::Lzc;
    std::vector<QubitId> input, output;
    std::optional<QubitId> mode_qubit;
    std::vector<std::pair<RegisterRole, std::vector<QubitId>>> ancillas;
    std::vector<Gate> gates;
    bool saw_magic = false, in_gates = false, saw_end = false;

    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!saw_magic) {
            if (line != "qlzoc-circuit v1") throw FormatError("missing circuit header");
            saw_magic = true;
            continue;
        }
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (!in_gates) {
            if (word == "name") {
                ls >> name;
            } else if (word == "m") {
                ls >> m;
            } else if (word == "mode") {
                std::string s;
                ls >> s;
                auto parsed = mode_from_name(s);
                if (!parsed) throw FormatError("unknown mode " + s);
                mode = *parsed;
            } else if (word == "qubits") {
                ls >> qubits;
            } else if (word == "cbits") {
                ls >> cbits;
            } else if (word == "register") {
                std::string which, ids;
                ls >> which >> ids;
                if (which == "input") {
                    input = split_ids(ids);
                } else if (which == "output") {
                    output = split_ids(ids);
                } else if (which == "mode") {
                    mode_qubit = static_cast<QubitId>(std::stoul(ids));
                } else {
                    throw FormatError("unknown register " + which);
                }
            } else if (word == "ancilla") {
                std::string role_name, ids;
                ls >> role_name >> ids;
                RegisterRole role;
                if (role_name == register_role_name(RegisterRole::AncillaReusable)) {
                    role = RegisterRole::AncillaReusable;
                } else if (role_name == register_role_name(RegisterRole::AncillaGarbage)) {
                    role = RegisterRole::AncillaGarbage;
                } else if (role_name == register_role_name(RegisterRole::TStateResource)) {
                    role = RegisterRole::TStateResource;
                } else {
                    throw FormatError("unknown ancilla role " + role_name);
                }
                ancillas.emplace_back(role, split_ids(ids));
            } else if (word == "gates") {
                in_gates = true;
            } else {
                throw FormatError("unexpected header line: " + line);
            }
            continue;
        }
        if (word == "end") {
            saw_end = true;
            break;
        }
        auto kind = kind_from_name(word);
        if (!kind) throw FormatError("unknown gate kind " + word);
        Gate g;
        g.kind = *kind;
        std::string field;
        while (ls >> field) {
            if (field.rfind("c:", 0) == 0) {
                g.controls = split_ids(field.substr(2));
            } else if (field.rfind("t:", 0) == 0) {
                g.targets = split_ids(field.substr(2));
            } else if (field.rfind("b:", 0) == 0) {
                g.cbit = static_cast<ClassicalBit>(std::stol(field.substr(2)));
            } else {
                throw FormatError("unknown gate field " + field);
            }
        }
        gates.push_back(std::move(g));
    }
    if (!saw_end) throw FormatError("missing end marker");

    std::vector<RegisterRole> roles(qubits, RegisterRole::AncillaReusable);
    std::vector<bool> assigned(qubits, false);
    auto put = [&](QubitId q, RegisterRole role) {
        if (q >= qubits) throw FormatError("register id exceeds qubit count");
        if (assigned[q]) throw FormatError("qubit listed in two registers");
        roles[q] = role;
        assigned[q] = true;
    };
    for (QubitId q : input) put(q, RegisterRole::Input);
    for (QubitId q : output) put(q, RegisterRole::Output);
    if (mode_qubit) put(*mode_qubit, RegisterRole::Mode);
    for (const auto& [role, ids] : ancillas) {
        for (QubitId q : ids) put(q, role);
    }
    for (bool a : assigned) {
        if (!a) throw FormatError("qubit missing from every register");
    }
    return Circuit::from_parts(std::move(name), m, mode, std::move(roles), std::move(input),
                               std::move(output), mode_qubit, cbits, std::move(gates));
}

std::string emit_qasm(const Circuit& circuit, const DecompositionPolicy& policy) {
    const Circuit low = expand_circuit(circuit, policy, ExpandLevel::Qasm);
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "// qlzoc name " << low.name() << "\n";
    os << "// qlzoc m " << low.input_width() << "\n";
    os << "// qlzoc mode " << count_mode_name(low.mode()) << "\n";
    os << "// qlzoc register input " << join_ids(low.input_msb_first()) << "\n";
    os << "// qlzoc register output " << join_ids(low.output_msb_first()) << "\n";
    if (low.mode_qubit()) os << "// qlzoc register mode " << *low.mode_qubit() << "\n";
    for (RegisterRole role : {RegisterRole::AncillaReusable, RegisterRole::AncillaGarbage,
                              RegisterRole::TStateResource}) {
        const auto ids = low.qubits_with_role(role);
        if (!ids.empty()) {
            os << "// qlzoc ancilla " << register_role_name(role) << " " << join_ids(ids) << "\n";
        }
    }
    os << "qreg q[" << low.qubit_count() << "];\n";
    for (std::uint32_t b = 0; b < low.classical_bit_count(); ++b) {
        os << "creg m" << b << "[1];\n";
    }
    auto q = [](QubitId id) { return "q[" + std::to_string(id) + "]"; };
    for (const Gate& g : low.gates()) {
        switch (g.kind) {
            case GateKind::X: os << "x " << q(g.targets[0]) << ";\n"; break;
            case GateKind::H: os << "h " << q(g.targets[0]) << ";\n"; break;
            case GateKind::S: os << "s " << q(g.targets[0]) << ";\n"; break;
            case GateKind::Sdg: os << "sdg " << q(g.targets[0]) << ";\n"; break;
            case GateKind::T: os << "t " << q(g.targets[0]) << ";\n"; break;
            case GateKind::Tdg: os << "tdg " << q(g.targets[0]) << ";\n"; break;
            case GateKind::CX:
                os << "cx " << q(g.controls[0]) << "," << q(g.targets[0]) << ";\n";
                break;
            case GateKind::CZ:
                os << "cz " << q(g.targets[0]) << "," << q(g.targets[1]) << ";\n";
                break;
            case GateKind::CCX:
                os << "ccx " << q(g.controls[0]) << "," << q(g.controls[1]) << ","
                   << q(g.targets[0]) << ";\n";
                break;
            case GateKind::Measure:
                os << "measure " << q(g.targets[0]) << " -> m" << g.cbit << "[0];\n";
                break;
            case GateKind::CzIf:
                os << "if(m" << g.cbit << "==1) cz " << q(g.targets[0]) << ","
                   << q(g.targets[1]) << ";\n";
                break;
            case GateKind::XIf:
                os << "if(m" << g.cbit << "==1) x " << q(g.targets[0]) << ";\n";
                break;
            default:
                throw FormatError(std::string("gate ") + gate_kind_name(g.kind) +
                                  " has no qasm form even after expansion");
        }
    }
    return os.str();
}

namespace {

QubitId parse_qref(const std::string& tok) {
    const auto l = tok.find('[');
    const auto r = tok.find(']');
    if (l == std::string::npos || r == std::string::npos || r < l) {
        throw FormatError("malformed qubit reference " + tok);
    }
    return static_cast<QubitId>(std::stoul(tok.substr(l + 1, r - l - 1)));
}

std::vector<std::string> split_args(std::string rest) {
    // strip trailing ';'
    while (!rest.empty() && (rest.back() == ';' || rest.back() == ' ' || rest.back() == '\r')) {
        rest.pop_back();
    }
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(rest);
    while (std::getline(is, cur, ',')) {
        cur.erase(std::remove(cur.begin(), cur.end(), ' '), cur.end());
        out.push_back(cur);
    }
    return out;
}

}  // namespace

Circuit parse_qasm(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::string name = "parsed";
    std::uint32_t m = 0, qubits = 0;
    CountMode mode = CountMode::Lzc;
    std::vector<QubitId> input, output;
    std::optional<QubitId> mode_qubit;
    std::vector<std::pair<RegisterRole, std::vector<QubitId>>> ancillas;
    std::vector<Gate> gates;
    std::uint32_t cbits = 0;

    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line.rfind("// qlzoc ", 0) == 0) {
            std::istringstream ls(line.substr(9));
            std::string word;
            ls >> word;
            if (word == "name") {
                ls >> name;
            } else if (word == "m") {
                ls >> m;
            } else if (word == "mode") {
                std::string s;
                ls >> s;
                if (auto parsed = mode_from_name(s)) mode = *parsed;
            } else if (word == "register") {
                std::string which, ids;
                ls >> which >> ids;
                if (which == "input") input = split_ids(ids);
                if (which == "output") output = split_ids(ids);
                if (which == "mode") mode_qubit = static_cast<QubitId>(std::stoul(ids));
            } else if (word == "ancilla") {
                std::string role_name, ids;
                ls >> role_name >> ids;
                for (RegisterRole role :
                     {RegisterRole::AncillaReusable, RegisterRole::AncillaGarbage,
                      RegisterRole::TStateResource}) {
                    if (role_name == register_role_name(role)) {
                        ancillas.emplace_back(role, split_ids(ids));
                    }
                }
            }
            continue;
        }
        if (line.rfind("//", 0) == 0 || line.rfind("OPENQASM", 0) == 0 ||
            line.rfind("include", 0) == 0) {
            continue;
        }
        if (line.rfind("qreg", 0) == 0) {
            qubits = parse_qref(line);
            continue;
        }
        if (line.rfind("creg", 0) == 0) {
            ++cbits;
            continue;
        }
        ClassicalBit cond = -1;
        std::string body = line;
        if (body.rfind("if(", 0) == 0) {
            const auto close = body.find(')');
            if (close == std::string::npos) throw FormatError("malformed if: " + line);
            std::string guard = body.substr(3, close - 3);  // mK==1
            const auto eq = guard.find("==");
            if (eq == std::string::npos || guard[0] != 'm') {
                throw FormatError("malformed classical condition: " + line);
            }
            cond = static_cast<ClassicalBit>(std::stol(guard.substr(1, eq - 1)));
            body = body.substr(close + 1);
            while (!body.empty() && body.front() == ' ') body.erase(body.begin());
        }
        std::istringstream ls(body);
        std::string op;
        ls >> op;
        std::string rest;
        std::getline(ls, rest);
        if (op == "measure") {
            // measure q[i] -> mK[0];
            const auto arrow = rest.find("->");
            if (arrow == std::string::npos) throw FormatError("malformed measure: " + line);
            const QubitId t = parse_qref(rest.substr(0, arrow));
            std::string creg = rest.substr(arrow + 2);
            const auto mpos = creg.find('m');
            if (mpos == std::string::npos) throw FormatError("malformed measure: " + line);
            const auto bracket = creg.find('[', mpos);
            const auto bit =
                static_cast<ClassicalBit>(std::stol(creg.substr(mpos + 1, bracket - mpos - 1)));
            gates.push_back(Gate::measure(t, bit));
            continue;
        }
        const auto args = split_args(rest);
        std::vector<QubitId> qs;
        qs.reserve(args.size());
        for (const auto& a : args) qs.push_back(parse_qref(a));
        if (cond >= 0) {
            if (op == "cz" && qs.size() == 2) {
                gates.push_back(Gate::cz_if(cond, qs[0], qs[1]));
            } else if (op == "x" && qs.size() == 1) {
                gates.push_back(Gate::x_if(cond, qs[0]));
            } else {
                throw FormatError("unsupported conditional gate: " + line);
            }
            continue;
        }
        if (op == "x" && qs.size() == 1) {
            gates.push_back(Gate::x(qs[0]));
        } else if (op == "h" && qs.size() == 1) {
            gates.push_back(Gate::h(qs[0]));
        } else if (op == "s" && qs.size() == 1) {
            gates.push_back(Gate::s(qs[0]));
        } else if (op == "sdg" && qs.size() == 1) {
            gates.push_back(Gate::sdg(qs[0]));
        } else if (op == "t" && qs.size() == 1) {
            gates.push_back(Gate::t_gate(qs[0]));
        } else if (op == "tdg" && qs.size() == 1) {
            gates.push_back(Gate::tdg(qs[0]));
        } else if (op == "cx" && qs.size() == 2) {
            gates.push_back(Gate::cx(qs[0], qs[1]));
        } else if (op == "cz" && qs.size() == 2) {
            gates.push_back(Gate::cz(qs[0], qs[1]));
        } else if (op == "ccx" && qs.size() == 3) {
            gates.push_back(Gate::ccx(qs[0], qs[1], qs[2]));
        } else {
            throw FormatError("unsupported qasm statement: " + line);
        }
    }

    std::vector<RegisterRole> roles(qubits, RegisterRole::AncillaReusable);
    for (QubitId q : input) roles[q] = RegisterRole::Input;
    for (QubitId q : output) roles[q] = RegisterRole::Output;
    if (mode_qubit) roles[*mode_qubit] = RegisterRole::Mode;
    for (const auto& [role, ids] : ancillas) {
        for (QubitId q : ids) roles[q] = role;
    }
    return Circuit::from_parts(std::move(name), m, mode, std::move(roles), std::move(input),
                               std::move(output), mode_qubit, cbits, std::move(gates));
}

}  // namespace qlzoc
