#include "rooklab/report.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>

#include "rooklab/constructions.hpp"
#include "rooklab/oracles.hpp"
#include "rooklab/spectral.hpp"

namespace rooklab {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::BoundConsistent: return "bound-consistent";
        case Verdict::Discrepancy: return "discrepancy";
        case Verdict::OracleSkipped: return "oracle-skipped";
    }
    return "?";
}

const QuantityRecord* AnalysisReport::find(std::string_view name) const {
    for (const auto& q : quantities)
        if (q.name == name) return &q;
    return nullptr;
}

std::size_t AnalysisReport::discrepancies() const {
    return static_cast<std::size_t>(std::count_if(quantities.begin(), quantities.end(),
                                                  [](const auto& q) { return q.verdict == Verdict::Discrepancy; }));
}

std::set<std::string> parse_oracle_selection(std::string_view text) {
    if (text == "all") return oracle_names();
    if (text == "none" || text.empty()) return {};
    std::set<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        std::string name(text.substr(pos, comma == text.npos ? text.npos : comma - pos));
        if (!oracle_names().count(name)) throw InvalidArgument("unknown oracle '" + name + "'");
        out.insert(std::move(name));
        if (comma == text.npos) break;
        pos = comma + 1;
    }
    return out;
}

Json vertex_json(const Vertex& v) { return Json(v); }

Json spec_json(const GraphSpec& spec) {
    return Json{{"family", std::string(family_name(spec.family))}, {"m", spec.m}, {"n", spec.n}};
}

Json to_json(const BoundRecord& b) {
    return Json{{"quantity", b.quantity},          {"side", std::string(side_name(b.side))},
                {"value", b.value.str()},           {"rounded", b.rounded.str()},
                {"formula_tag", b.formula_tag},     {"paper_anchor", b.anchor}};
}

Json to_json(const QuantityRecord& q) {
    Json bounds = Json::array();
    for (const auto& b : q.bounds) bounds.push_back(to_json(b));
    return Json{{"name", q.name},           {"constructed", q.constructed},
                {"bounds", bounds},         {"oracle", q.oracle},
                {"verdict", std::string(verdict_name(q.verdict))}, {"notes", q.notes}};
}

Json to_json(const AnalysisReport& r) {
    Json qs = Json::array();
    for (const auto& q : r.quantities) qs.push_back(to_json(q));
    return Json{{"spec", spec_json(r.spec)},
                {"p", r.p},
                {"quantities", qs},
                {"summary", Json{{"quantities", r.quantities.size()}, {"discrepancies", r.discrepancies()}}}};
}

namespace {

class Analyzer {
public:
    Analyzer(const GraphSpec& spec, const std::set<std::string>& oracles, const Limits& limits)
        : spec_(spec), oracles_(oracles), limits_(limits), bounds_(bounds_report(spec)) {
        report_.spec = spec;
        report_.p = bounds_.p;
    }

    AnalysisReport run() {
        if (spec_.family == Family::SR)
            analyze_sr();
        else
            analyze_csr();
        for (auto& q : quantities_) {
            finalize(q);
            report_.quantities.push_back(std::move(q));
        }
        return std::move(report_);
    }

private:
    QuantityRecord& start(std::string name) {
        QuantityRecord q;
        q.name = name;
        for (const auto* b : bounds_.find(name)) q.bounds.push_back(*b);
        quantities_.push_back(std::move(q));
        return quantities_.back();
    }

    std::optional<BigInt> bound(std::string_view name, BoundSide side) const { return bounds_.tightest(name, side); }

    // Runs `fn` when the named oracle was selected and fits its caps.
    template <class Fn>
    auto oracle(const std::string& name, QuantityRecord& q, Fn&& fn) -> std::optional<decltype(fn())> {
        if (!oracles_.count(name)) {
            q.notes.push_back("oracle not requested");
            return std::nullopt;
        }
        try {
            return fn();
        } catch (const CapExceeded& e) {
            q.notes.push_back(std::string("oracle skipped: ") + e.what());
            return std::nullopt;
        }
    }

    const Graph* graph() {
        if (!graph_) graph_.emplace(spec_, limits_);
        return &*graph_;
    }

    std::optional<std::size_t> alpha_oracle(QuantityRecord& q) {
        if (!alpha_) alpha_ = oracle("alpha", q, [&] { return oracle_alpha(*graph(), limits_).value; });
        return alpha_;
    }

    std::optional<std::size_t> gamma_oracle(QuantityRecord& q) {
        if (!gamma_) gamma_ = oracle("gamma", q, [&] { return oracle_gamma(*graph(), limits_).value; });
        return gamma_;
    }

    static void fail(QuantityRecord& q, std::string msg) {
        q.notes.push_back("discrepancy: " + std::move(msg));
        q.verdict = Verdict::Discrepancy;
    }

    void check_oracle_in_bounds(QuantityRecord& q, std::size_t value) {
        if (auto lo = bound(q.name, BoundSide::Lower); lo && BigInt(value) < *lo)
            fail(q, "oracle " + std::to_string(value) + " below lower bound " + lo->str());
        if (auto hi = bound(q.name, BoundSide::Upper); hi && BigInt(value) > *hi)
            fail(q, "oracle " + std::to_string(value) + " above upper bound " + hi->str());
        if (auto ex = bound(q.name, BoundSide::Exact); ex && BigInt(value) != *ex)
            fail(q, "oracle " + std::to_string(value) + " differs from formula value " + ex->str());
    }

    void finalize(QuantityRecord& q) {
        if (q.verdict == Verdict::Discrepancy) return;
        if (!q.oracle.is_null())
            q.verdict = Verdict::Certified;
        else if (!q.constructed.is_null() || !q.bounds.empty())
            q.verdict = Verdict::BoundConsistent;
        else
            q.verdict = Verdict::OracleSkipped;
    }

    void analyze_alpha_from_family(QuantityRecord& q, const ResidueClassFamily& fam) {
        std::size_t failing = 0;
        for (bool ok : fam.independent) failing += ok ? 0 : 1;
        const auto best = fam.best_class();
        q.constructed = Json{{"p", fam.p},
                             {"best_class", best ? Json(*best) : Json()},
                             {"size", best ? Json(fam.classes[*best].size()) : Json()},
                             {"classes_failing_scan", failing}};
        if (failing)
            fail(q, std::to_string(failing) + " of " + std::to_string(fam.p) +
                        " residue classes are not independent sets");
        if (auto a = alpha_oracle(q)) {
            q.oracle = *a;
            check_oracle_in_bounds(q, *a);
            if (best && fam.classes[*best].size() > *a) fail(q, "independent class larger than oracle alpha");
        }
    }

    void analyze_sr() {
        const BigInt vertices = vertex_count(spec_);

        auto& alpha = start("alpha");
        const auto fam = residue_independent_family(spec_, std::nullopt, limits_);
        analyze_alpha_from_family(alpha, fam);
        if (auto best = fam.best_class(); best && BigInt(fam.classes[*best].size()) * fam.p < vertices)
            fail(alpha, "largest residue class below |V|/p");

        auto& gamma = start("gamma");
        std::optional<std::size_t> d_size;
        if (spec_.m >= 3) {
            const SrDominatingSet d(spec_.m, spec_.n, limits_);
            d_size = d.members().size();
            gamma.constructed = Json{{"set", "x1=x2"}, {"size", *d_size}, {"formula_size", d.formula_size().str()}};
            if (BigInt(*d_size) != d.formula_size()) fail(gamma, "|D| differs from the closed-form count");
            if (BigInt(*d_size) * 2 > d.twice_upper_bound()) fail(gamma, "|D| exceeds C(n+m-1,m-2)/2");
            for (const auto& v : enumerate_vertices(spec_, limits_)) {
                const Vertex w = d.witness(v);
                if (w[0] != w[1] || (w != v && !adjacent(spec_, v, w))) {
                    fail(gamma, "witness for " + format_vertex(v) + " does not dominate it");
                    break;
                }
            }
        }
        const auto g = gamma_oracle(gamma);
        if (g) {
            gamma.oracle = *g;
            if (auto lo = bound("gamma", BoundSide::Lower); lo && BigInt(*g) < *lo)
                fail(gamma, "oracle " + std::to_string(*g) + " below |V|/(Delta+1)");
            if (d_size && *g > *d_size) fail(gamma, "oracle exceeds |D|");
        }

        if (spec_.m == 3) {
            auto& conj = start("gamma_conjecture");
            const auto c = conjectured_dominating_set_sr3(spec_.n, false, limits_);
            conj.constructed = Json{{"size", c.members.size()}, {"dominates", c.dominates}};
            if (!c.dominates) fail(conj, "{(i,i,n-2i)} does not dominate");
            if (g) {
                conj.oracle = *g;
                if (*g != c.members.size())
                    fail(conj, "conjectured minimum has size " + std::to_string(c.members.size()) +
                                   " but oracle gamma = " + std::to_string(*g));
            } else {
                conj.notes.push_back("oracle not run");
            }
        }

        auto& omega = start("omega");
        if (auto w = oracle("omega", omega, [&] { return oracle_omega(*graph(), limits_).value; })) omega.oracle = *w;

        auto& chi = start("chi");
        const auto col = residue_coloring(spec_, std::nullopt, limits_);
        chi.constructed = Json{{"colors", col.p}, {"proper", col.proper}};
        if (!col.proper) fail(chi, "residue coloring is not proper");
        if (auto x = oracle("chi", chi, [&] { return oracle_chi(*graph(), limits_).chromatic; })) {
            chi.oracle = *x;
            check_oracle_in_bounds(chi, *x);
        }

        analyze_diameter();

        auto& spec_q = start("lambda_min");
        if (auto s = oracle("spectrum", spec_q, [&] { return spectrum(*graph(), limits_); })) {
            const auto formula = sr_lambda_min_formula(spec_.m, spec_.n);
            const double r = static_cast<double>(regular_degree(spec_));
            const auto hoffman = hoffman_alpha_bound(*s, r, graph()->size(), limits_.tol);
            spec_q.oracle = Json{{"lambda_min", s->min()},
                                 {"integral", s->integral},
                                 {"max_integer_deviation", s->max_integer_deviation},
                                 {"hoffman_alpha_bound", hoffman}};
            if (!s->integral) fail(spec_q, "spectrum is not integral");
            if (std::abs(s->min() - static_cast<double>(formula)) > limits_.tol)
                fail(spec_q, "lambda_min " + std::to_string(s->min()) + " differs from " + std::to_string(formula));
            if (alpha_ && hoffman < *alpha_) fail(spec_q, "Hoffman bound below oracle alpha");
        }
    }

    void analyze_diameter() {
        auto& diam = start("diameter");
        if (spec_.family == Family::CSR && spec_.m <= limits_.mask_limit) {
            const auto formula = csr_diameter(spec_.m, spec_.n);
            const int witness_distance = spec_.m - tau(formula.witness, spec_.n, limits_).tau;
            int worst = 0;
            for (const auto& b : enumerate_vertices(spec_, limits_))
                worst = std::max(worst, spec_.m - tau(b, spec_.n, limits_).tau);
            diam.constructed = Json{{"max_m_minus_tau", worst},
                                    {"witness", vertex_json(formula.witness)},
                                    {"witness_distance", witness_distance}};
            if (worst != formula.diameter) fail(diam, "max over b of m - tau(b) is " + std::to_string(worst));
            if (witness_distance != formula.diameter) fail(diam, "witness vertex is not at the formula distance");
        }
        if (auto d = oracle("diameter", diam, [&] {
                if (graph()->size() > 4 * limits_.search_cap * limits_.search_cap)
                    throw CapExceeded("all-pairs BFS above the search cap");
                return oracle_diameter(*graph());
            })) {
            diam.oracle = *d;
            check_oracle_in_bounds(diam, static_cast<std::size_t>(*d));
        }
    }

    void analyze_csr() {
        const int m = spec_.m, n = spec_.n;

        auto& alpha = start("alpha");
        analyze_alpha_from_family(alpha, residue_independent_family(spec_, std::nullopt, limits_));

        auto& omega = start("omega");
        std::optional<std::size_t> clique_size;
        if (m >= 2 && n >= 2) {
            const auto c = max_clique_csr(m, n, limits_);
            clique_size = c.members.size();
            omega.constructed =
                Json{{"kind", c.kind == CliqueKind::Coset ? "coset" : "core"}, {"size", c.members.size()}};
        }
        if (auto w = oracle("omega", omega, [&] { return oracle_omega(*graph(), limits_).value; })) {
            omega.oracle = *w;
            check_oracle_in_bounds(omega, *w);
            if (clique_size && *clique_size > *w) fail(omega, "constructed clique larger than oracle omega");
        }

        auto& chi = start("chi");
        const auto col = proper_coloring_csr(m, n, std::nullopt, limits_);
        chi.constructed = Json{{"colors", col.p}, {"proper", col.proper}};
        if (!col.proper)
            fail(chi, "residue coloring with p = " + std::to_string(col.p) + " colors is NOT proper (edge " +
                          format_vertex(col.conflict->first) + " - " + format_vertex(col.conflict->second) + ")");
        if (auto x = oracle("chi", chi, [&] { return oracle_chi(*graph(), limits_).chromatic; })) {
            chi.oracle = *x;
            check_oracle_in_bounds(chi, *x);
        }

        auto& gamma = start("gamma");
        if (auto g = gamma_oracle(gamma)) {
            gamma.oracle = *g;
            check_oracle_in_bounds(gamma, *g);
        }

        analyze_diameter();

        auto& spec_q = start("spectrum");
        const auto chars = csr_character_spectrum(m, n, limits_);
        spec_q.constructed = Json{{"method", "characters"},
                                  {"lambda_min", chars.min()},
                                  {"integral", chars.integral},
                                  {"max_imaginary", chars.max_imaginary}};
        if (auto s = oracle("spectrum", spec_q, [&] { return spectrum(*graph(), limits_); })) {
            spec_q.oracle = Json{{"method", "dense"}, {"lambda_min", s->min()}, {"integral", s->integral}};
            if (!same_spectrum(*s, chars, limits_.tol)) fail(spec_q, "character spectrum differs from dense spectrum");
        }
    }

    GraphSpec spec_;
    std::set<std::string> oracles_;
    Limits limits_;
    BoundsReport bounds_;
    AnalysisReport report_;
    std::optional<Graph> graph_;
    std::deque<QuantityRecord> quantities_;  // stable references while records are filled
    std::optional<std::size_t> alpha_, gamma_;
};

}  // namespace

AnalysisReport analyze(const GraphSpec& spec, const std::set<std::string>& oracles, const Limits& limits) {
    spec.validate();
    return Analyzer(spec, oracles, limits).run();
}

}  // namespace rooklab
