#include "qlzoc/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace qlzoc {

namespace {

bool is_macro(GateKind kind) {
    return kind == GateKind::CCX || kind == GateKind::MCX || kind == GateKind::TAndCompute ||
           kind == GateKind::TAndUncompute;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> t_metrics(const Circuit& expanded) {
    std::vector<std::int64_t> ql(expanded.qubit_count(), 0);
    std::vector<std::int64_t> cl(expanded.classical_bit_count(), 0);
    std::int64_t t_count = 0;
    std::int64_t t_depth = 0;
    for (const Gate& g : expanded.gates()) {
        if (is_macro(g.kind)) {
            throw WrongLevelError("t_metrics needs a fully expanded circuit");
        }
        std::int64_t base = 0;
        for (QubitId q : g.qubits()) base = std::max(base, ql[q]);
        if (g.cbit >= 0) base = std::max(base, cl[g.cbit]);
        std::int64_t level = base;
        if (g.is_t_type()) {
            ++t_count;
            level = base + 1;
            t_depth = std::max(t_depth, level);
        }
        for (QubitId q : g.qubits()) ql[q] = level;
        if (g.kind == GateKind::Measure) cl[g.cbit] = level;
    }
    return {t_count, t_depth};
}

DepthWidth depth_width(const Circuit& expanded) {
    std::vector<std::int64_t> ql(expanded.qubit_count(), 0);
    std::vector<std::int64_t> cl(expanded.classical_bit_count(), 0);
    std::int64_t depth = 0;
    for (const Gate& g : expanded.gates()) {
        if (is_macro(g.kind)) {
            throw WrongLevelError("depth_width needs a fully expanded circuit");
        }
        std::int64_t base = 0;
        for (QubitId q : g.qubits()) base = std::max(base, ql[q]);
        if (g.cbit >= 0) base = std::max(base, cl[g.cbit]);
        const std::int64_t level = base + 1;
        depth = std::max(depth, level);
        for (QubitId q : g.qubits()) ql[q] = level;
        if (g.cbit >= 0) cl[g.cbit] = level;
    }
    DepthWidth dw;
    dw.total_depth = depth;
    dw.width_total = expanded.qubit_count();
    dw.width_excl_reusable =
        dw.width_total - expanded.count_role(RegisterRole::AncillaReusable);
    return dw;
}

ResourceReport analyze_design(DesignId design, std::uint32_t m, const DecompositionPolicy& policy) {
    const Circuit macro = build_design(design, m);
    const Circuit expanded = expand_circuit(macro, policy, ExpandLevel::CliffordT);
    ResourceReport rep;
    std::tie(rep.t_count, rep.t_depth) = t_metrics(expanded);
    const DepthWidth dw = depth_width(expanded);
    rep.total_depth = dw.total_depth;
    rep.width_total = dw.width_total;
    rep.width_excl_reusable = dw.width_excl_reusable;
    rep.ancilla_reusable = expanded.count_role(RegisterRole::AncillaReusable);
    rep.ancilla_garbage = expanded.count_role(RegisterRole::AncillaGarbage);
    for (const Gate& g : macro.gates()) {
        if (g.kind == GateKind::TAndCompute) ++rep.t_state_consumed;
    }
    return rep;
}

AncillaClasses ancilla_classes(const Circuit& circuit, const VerificationReport& evidence) {
    if (evidence.cases == 0) {
        throw EvidenceError("ancilla classification needs at least one simulated input");
    }
    AncillaClasses out;
    for (const auto& [q, ever_nonzero] : evidence.ancilla_ever_nonzero) {
        if (ever_nonzero) {
            out.garbage.push_back(q);
        } else {
            out.reusable.push_back(q);
        }
        const auto declared = circuit.role_of(q);
        const auto observed =
            ever_nonzero ? RegisterRole::AncillaGarbage : RegisterRole::AncillaReusable;
        if (declared != observed) out.role_mismatches.push_back(q);
    }
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::TAndCompute) ++out.t_state_consumed;
    }
    return out;
}

Rational::Rational(std::int64_t n) : num(n), den(1) {}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string FormValue::str() const {
    if (exact) return exact->str();
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << value;
    return os.str();
}

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::TCount: return "t_count";
        case Metric::TDepth: return "t_depth";
        case Metric::Ancilla: return "ancilla";
        case Metric::GarbageAncilla: return "garbage_ancilla";
        case Metric::WidthTotal: return "width_total";
        case Metric::WidthExclReusable: return "width_excl_reusable";
        case Metric::Depth: return "depth";
    }
    return "?";
}

namespace {

FormValue exact_form(Rational r) {
    return FormValue{r.to_double(), r};
}

std::uint32_t exact_lg(std::uint32_t m) {
    std::uint32_t p = 0;
    while ((1u << (p + 1)) <= m) ++p;
    return p;
}

}  // namespace

std::map<Metric, FormValue> closed_forms(DesignId design, std::uint32_t m) {
    std::map<Metric, FormValue> out;
    const bool qlzc_seq = design == DesignId::TaOpQlzc || design == DesignId::TaOpQloc ||
                          design == DesignId::ReconfigurableQlzoc;
    if (qlzc_seq && design != DesignId::TaOpQlzc) {
        return out;  // cost tables cover the dedicated LZC variants only
    }
    const std::int64_t mi = m;
    if (design == DesignId::TaOpQlzc) {
        if (m < 1) return out;
        out[Metric::TCount] = exact_form(Rational(4 * mi - 4));
        out[Metric::TDepth] = exact_form(Rational(mi));
        out[Metric::Ancilla] = exact_form(Rational(mi));
        out[Metric::GarbageAncilla] = exact_form(Rational(0));
        out[Metric::WidthTotal] = exact_form(Rational(2 * mi + exact_lg(m) + 1));
        out[Metric::Depth] = exact_form(Rational(14 * (mi - 1) + 2 * mi));
        return out;
    }
    if (design != DesignId::TaOpPqlzc && design != DesignId::FoTaOpPqlzc) return out;
    if (!design_width_ok(design, m)) return out;
    const std::int64_t lg = exact_lg(m);
    const Rational lgr(lg);
    // T-count: 3m + lg m (7/2 lg m + 1/2) - 23/2, shared by both variants.
    out[Metric::TCount] =
        exact_form(Rational(3 * mi) + lgr * (Rational(7, 2) * lgr + Rational(1, 2)) -
                   Rational(23, 2));
    out[Metric::GarbageAncilla] = exact_form(Rational(mi - lg - 2));
    if (design == DesignId::TaOpPqlzc) {
        out[Metric::TDepth] =
            exact_form(lgr * (Rational(3, 2) * lgr - Rational(1, 2)) + Rational(1, 2));
        out[Metric::Ancilla] = exact_form(Rational(5, 4) * Rational(mi) - lgr - Rational(2));
        out[Metric::WidthTotal] = exact_form(Rational(9, 4) * Rational(mi) - Rational(1));
        out[Metric::Depth] =
            exact_form(lgr * (Rational(9, 2) * lgr + Rational(15, 2)) - Rational(1));
    } else {
        out[Metric::TDepth] = exact_form(Rational(3 * lg - 2));
        out[Metric::Ancilla] = exact_form(Rational(3, 2) * Rational(mi) - lgr - Rational(2));
        out[Metric::WidthTotal] = exact_form(Rational(5, 2) * Rational(mi) - Rational(1));
        // 12 lg m + 8 + 2 lg((lg m - 1)!): the factorial term is a power of
        // two only for small m; keep the exact value when it is.
        std::uint64_t fact = 1;
        for (std::uint64_t k = 2; k + 1 <= static_cast<std::uint64_t>(lg); ++k) fact *= k;
        const double term = 2.0 * std::log2(static_cast<double>(fact));
        FormValue fv;
        fv.value = 12.0 * static_cast<double>(lg) + 8.0 + term;
        if ((fact & (fact - 1)) == 0) {
            std::int64_t lgf = 0;
            while ((1ull << lgf) < fact) ++lgf;
            fv.exact = Rational(12 * lg + 8 + 2 * lgf);
        }
        out[Metric::Depth] = fv;
    }
    return out;
}

std::map<Metric, std::int64_t> published_claims(DesignId design, std::uint32_t m) {
    std::map<Metric, std::int64_t> out;
    if (m == 4) {
        // The published width convention is unclear (see the TA-OP row: width
        // 7 with 4 ancillas); width claims ride the total-width row so the
        // conflict with the cost formulas stays visible.
        if (design == DesignId::POp4Qlzc) {
            out = {{Metric::TCount, 28},
                   {Metric::TDepth, 12},
                   {Metric::Ancilla, 1},
                   {Metric::WidthTotal, 4},
                   {Metric::Depth, 42}};
        } else if (design == DesignId::TaPOp4Qlzc) {
            out = {{Metric::TCount, 12},
                   {Metric::TDepth, 4},
                   {Metric::Ancilla, 1},
                   {Metric::WidthTotal, 4},
                   {Metric::Depth, 32}};
        } else if (design == DesignId::TaOpQlzc) {
            out = {{Metric::TCount, 12},
                   {Metric::TDepth, 4},
                   {Metric::Ancilla, 4},
                   {Metric::WidthTotal, 7},
                   {Metric::Depth, 47}};
        }
    } else if (m == 8) {
        if (design == DesignId::TaOpQlzc) {
            out = {{Metric::TCount, 28},
                   {Metric::TDepth, 8},
                   {Metric::Ancilla, 8},
                   {Metric::GarbageAncilla, 0},
                   {Metric::Depth, 103}};
        } else if (design == DesignId::TaOpPqlzc) {
            out = {{Metric::TCount, 42},
                   {Metric::TDepth, 11},
                   {Metric::Ancilla, 5},
                   {Metric::GarbageAncilla, 3},
                   {Metric::Depth, 59}};
        } else if (design == DesignId::FoTaOpPqlzc) {
            out = {{Metric::TCount, 42},
                   {Metric::TDepth, 7},
                   {Metric::Ancilla, 7},
                   {Metric::GarbageAncilla, 3},
                   {Metric::Depth, 46}};
        }
    }
    return out;
}

const char* row_status_name(RowStatus status) {
    switch (status) {
        case RowStatus::Match: return "match";
        case RowStatus::BetterThanPublished: return "better-than-published";
        case RowStatus::Mismatch: return "mismatch";
        case RowStatus::NoClaim: return "no-claim";
    }
    return "?";
}

namespace {

std::int64_t metric_value(const ResourceReport& r, Metric metric) {
    switch (metric) {
        case Metric::TCount: return r.t_count;
        case Metric::TDepth: return r.t_depth;
        case Metric::Ancilla: return r.ancilla_reusable + r.ancilla_garbage;
        case Metric::GarbageAncilla: return r.ancilla_garbage;
        case Metric::WidthTotal: return r.width_total;
        case Metric::WidthExclReusable: return r.width_excl_reusable;
        case Metric::Depth: return r.total_depth;
    }
    return 0;
}

bool formula_matches(const FormValue& fv, std::int64_t generated) {
    if (fv.exact) return *fv.exact == Rational(generated);
    return std::abs(fv.value - static_cast<double>(generated)) < 1e-9;
}

}  // namespace

std::vector<ComparisonRow> compare_design(DesignId design, std::uint32_t m,
                                          const ResourceReport& report) {
    const auto claims = published_claims(design, m);
    auto forms = closed_forms(design, m);
    std::vector<ComparisonRow> rows;
    for (Metric metric : kAllMetrics) {
        ComparisonRow row;
        row.design = design;
        row.m = m;
        row.metric = metric;
        row.generated = metric_value(report, metric);
        if (auto it = claims.find(metric); it != claims.end()) row.published = it->second;
        if (auto it = forms.find(metric); it != forms.end()) row.formula = it->second;
        row.strict_asserted =
            row.published.has_value() &&
            (metric == Metric::TCount || metric == Metric::TDepth || metric == Metric::Ancilla ||
             metric == Metric::GarbageAncilla);

        if (!row.published && !row.formula) {
            row.status = RowStatus::NoClaim;
        } else {
            const bool published_match = !row.published || *row.published == row.generated;
            const bool form_match = !row.formula || formula_matches(*row.formula, row.generated);
            if (published_match && form_match) {
                row.status = RowStatus::Match;
            } else if (row.published && row.generated < *row.published) {
                row.status = RowStatus::BetterThanPublished;
            } else if (!row.published && row.formula &&
                       static_cast<double>(row.generated) < row.formula->value) {
                row.status = RowStatus::BetterThanPublished;
            } else {
                row.status = RowStatus::Mismatch;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

bool strict_ok(const std::vector<ComparisonRow>& rows) {
    for (const ComparisonRow& row : rows) {
        if (!row.strict_asserted) continue;
        if (row.metric == Metric::TDepth) {
            if (row.generated > *row.published) return false;
        } else if (row.generated != *row.published) {
            return false;
        }
    }
    return true;
}

std::string serialize_resource_report(DesignId design, std::uint32_t m,
                                      const ResourceReport& r) {
    std::ostringstream os;
    os << "report: analyze\n";
    os << "design: " << design_name(design) << "\n";
    os << "m: " << m << "\n";
    os << "t_count: " << r.t_count << "\n";
    os << "t_depth: " << r.t_depth << "\n";
    os << "total_depth: " << r.total_depth << "\n";
    os << "width_total: " << r.width_total << "\n";
    os << "width_excl_reusable: " << r.width_excl_reusable << "\n";
    os << "ancilla_reusable: " << r.ancilla_reusable << "\n";
    os << "ancilla_garbage: " << r.ancilla_garbage << "\n";
    os << "t_state_consumed: " << r.t_state_consumed << "\n";
    return os.str();
}

std::string format_rows_machine(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    for (const ComparisonRow& row : rows) {
        os << "row design=" << design_name(row.design) << " m=" << row.m
           << " metric=" << metric_name(row.metric) << " generated=" << row.generated
           << " published=" << (row.published ? std::to_string(*row.published) : "-")
           << " formula=" << (row.formula ? row.formula->str() : "-")
           << " status=" << row_status_name(row.status)
           << " strict=" << (row.strict_asserted ? "yes" : "no") << "\n";
    }
    return os.str();
}

std::string format_rows_table(const std::vector<ComparisonRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(16) << "design" << std::setw(5) << "m" << std::setw(21)
       << "metric" << std::right << std::setw(10) << "generated" << std::setw(10) << "published"
       << std::setw(10) << "formula" << "  status\n";
    for (const ComparisonRow& row : rows) {
        os << std::left << std::setw(16) << design_name(row.design) << std::setw(5) << row.m
           << std::setw(21) << metric_name(row.metric) << std::right << std::setw(10)
           << row.generated << std::setw(10) << (row.published ? std::to_string(*row.published) : "-")
           << std::setw(10) << (row.formula ? row.formula->str() : "-") << "  "
           << row_status_name(row.status) << "\n";
    }
    return os.str();
}

}  // namespace qlzoc
