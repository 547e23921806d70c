#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rooklab/automorphisms.hpp"
#include "rooklab/constructions.hpp"
#include "rooklab/hardness.hpp"
#include "rooklab/metrics.hpp"
#include "rooklab/oracles.hpp"
#include "rooklab/report.hpp"
#include "rooklab/spectral.hpp"

namespace rooklab::cli {

namespace {

struct Options {
    std::string family;
    int m = -1;
    int n = -1;
    bool strict = false;
    Limits limits;

    // analyze
    std::string oracle = "all";
    std::string json_path;
    // generate
    std::string edges_out;
    // construct
    std::optional<std::int64_t> p;
    std::string cycle_out;
    bool conjectured = false;
    bool with_oracle = false;
    // distance
    std::string from, to;
    bool bfs = false;
    // aut
    bool count_only = false;
    bool aut_oracle = false;
    bool scan = false;
    // reduce-3partition
    std::string instance;
};

void emit(std::ostream& out, const Json& record) { out << record.dump() << '\n'; }

GraphSpec make_spec(const Options& o, std::optional<Family> fallback = std::nullopt) {
    if (o.m < 0 || o.n < 0) throw InvalidArgument("both -m and -n are required");
    Family f;
    if (!o.family.empty())
        f = parse_family(o.family);
    else if (fallback)
        f = *fallback;
    else
        throw InvalidArgument("--family is required");
    GraphSpec s{f, o.m, o.n};
    s.validate();
    return s;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InvalidArgument("cannot open '" + path + "' for writing");
    return f;
}

int finish(bool discrepancy, const Options& o) { return discrepancy && o.strict ? kDiscrepancy : kOk; }

int cmd_generate(const Options& o, std::ostream& out) {
    const GraphSpec spec = make_spec(o);
    if (o.edges_out.empty()) {
        write_edge_list(out, spec, o.limits);
    } else {
        auto f = open_out(o.edges_out);
        write_edge_list(f, spec, o.limits);
    }
    return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const GraphSpec spec = make_spec(o);
    const auto report = analyze(spec, parse_oracle_selection(o.oracle), o.limits);
    const Json doc = to_json(report);
    emit(out, Json{{"record", "spec"}, {"spec", doc["spec"]}, {"p", report.p}});
    for (const auto& q : doc["quantities"]) {
        Json line{{"record", "quantity"}};
        for (auto it = q.begin(); it != q.end(); ++it) line[it.key()] = it.value();
        emit(out, line);
    }
    emit(out, Json{{"record", "summary"}, {"quantities", report.quantities.size()},
                   {"discrepancies", report.discrepancies()}});
    if (!o.json_path.empty()) {
        auto f = open_out(o.json_path);
        f << doc.dump(2) << '\n';
    }
    return finish(report.discrepancies() > 0, o);
}

Json vertices_json(const std::vector<Vertex>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(vertex_json(v));
    return arr;
}

int cmd_independent_set(const Options& o, std::ostream& out) {
    const GraphSpec spec = make_spec(o, Family::SR);
    const auto fam = residue_independent_family(spec, o.p, o.limits);
    bool discrepancy = false;
    for (std::size_t t = 0; t < fam.classes.size(); ++t) {
        emit(out, Json{{"record", "residue_class"}, {"class", t}, {"size", fam.classes[t].size()},
                       {"independent", static_cast<bool>(fam.independent[t])}, {"vertices", vertices_json(fam.classes[t])}});
        discrepancy |= !fam.independent[t];
    }
    const auto best = fam.best_class();
    emit(out, Json{{"record", "construction"}, {"kind", "independent-set"}, {"spec", spec_json(spec)},
                   {"p", fam.p}, {"best_class", best ? Json(*best) : Json()},
                   {"size", best ? Json(fam.classes[*best].size()) : Json()},
                   {"verified", fam.all_independent()}});
    return finish(discrepancy, o);
}

int cmd_dominating_set(const Options& o, std::ostream& out) {
    if (o.conjectured) {
        if (o.m != -1 && o.m != 3) throw InvalidArgument("--conjectured applies to SR(3,n) only");
        if (o.n < 0) throw InvalidArgument("-n is required");
        const auto c = conjectured_dominating_set_sr3(o.n, o.with_oracle, o.limits);
        Json rec{{"record", "construction"}, {"kind", "dominating-set-conjectured"}, {"spec", spec_json(sr(3, o.n))},
                 {"size", c.members.size()}, {"vertices", vertices_json(c.members)}, {"verified", c.dominates},
                 {"oracle_gamma", c.oracle_gamma ? Json(*c.oracle_gamma) : Json()},
                 {"matches_oracle", c.matches_oracle ? Json(*c.matches_oracle) : Json()}};
        emit(out, rec);
        return finish(!c.dominates || (c.matches_oracle && !*c.matches_oracle), o);
    }
    const GraphSpec spec = make_spec(o, Family::SR);
    if (spec.family != Family::SR) throw InvalidArgument("dominating-set construction is defined for SR only");
    const SrDominatingSet d(spec.m, spec.n, o.limits);
    const Graph g(spec, o.limits);
    const bool dominates = is_dominating(g, d.members());
    bool discrepancy = !dominates || BigInt(d.members().size()) != d.formula_size();
    Json rec{{"record", "construction"}, {"kind", "dominating-set"}, {"spec", spec_json(spec)},
             {"size", d.members().size()}, {"formula_size", d.formula_size().str()},
             {"upper_bound", Rational(d.twice_upper_bound(), 2).str()}, {"vertices", vertices_json(d.members())},
             {"verified", dominates}};
    if (o.with_oracle) {
        const auto gamma = oracle_gamma(g, o.limits).value;
        rec["oracle_gamma"] = gamma;
        discrepancy |= gamma > d.members().size();
    }
    emit(out, rec);
    return finish(discrepancy, o);
}

int cmd_hamiltonian_cycle(const Options& o, std::ostream& out) {
    const GraphSpec spec = make_spec(o, Family::SR);
    if (spec.family != Family::SR) throw InvalidArgument("Hamiltonian cycles are constructed for SR only");
    const auto cycle = hamiltonian_cycle_sr(spec.m, spec.n, o.limits);
    const auto verdict = verify_cycle(spec, cycle.vertices, o.limits);
    if (!o.cycle_out.empty()) {
        auto f = open_out(o.cycle_out);
        for (const auto& v : cycle.vertices) f << format_vertex(v) << '\n';
    }
    emit(out, Json{{"record", "construction"}, {"kind", "hamiltonian-cycle"}, {"spec", spec_json(spec)},
                   {"length", cycle.vertices.size()}, {"verified", verdict.valid}, {"reason", verdict.reason},
                   {"cycle", vertices_json(cycle.vertices)}});
    if (!verdict.valid) throw InternalError("constructed cycle failed verification: " + verdict.reason);
    return kOk;
}

int cmd_clique(const Options& o, std::ostream& out) {
    const GraphSpec spec = make_spec(o, Family::CSR);
    if (spec.family != Family::CSR) throw InvalidArgument("clique construction is defined for CSR only");
    const auto c = max_clique_csr(spec.m, spec.n, o.limits);
    Json rec{{"record", "construction"}, {"kind", "clique"}, {"spec", spec_json(spec)},
             {"structure", c.kind == CliqueKind::Coset ? "coset" : "core"}, {"size", c.members.size()},
             {"formula", std::max(spec.m, spec.n)}, {"vertices", vertices_json(c.members)},
             {"verified", is_clique(spec, c.members)}};
    bool discrepancy = false;
    if (o.with_oracle) {
        const auto w = oracle_omega(spec, o.limits).value;
        rec["oracle_omega"] = w;
        discrepancy = w != c.members.size();
    }
    emit(out, rec);
    return finish(discrepancy, o);
}

int cmd_coloring(const Options& o, std::ostream& out) {
    const GraphSpec spec = make_spec(o, Family::CSR);
    const auto col = residue_coloring(spec, o.p, o.limits);
    Json colors = Json::array();
    for (std::size_t i = 0; i < col.vertices.size(); ++i)
        colors.push_back(Json{{"vertex", vertex_json(col.vertices[i])}, {"color", col.colors[i]}});
    Json rec{{"record", "construction"}, {"kind", "coloring"}, {"spec", spec_json(spec)}, {"p", col.p},
             {"proper", col.proper}, {"verified", col.proper}};
    if (col.conflict)
        rec["conflict"] = Json{vertex_json(col.conflict->first), vertex_json(col.conflict->second)};
    rec["colors"] = colors;
    emit(out, rec);
    return finish(!col.proper, o);
}

int cmd_distance(const Options& o, std::ostream& out) {
    const GraphSpec spec = make_spec(o, Family::CSR);
    if (spec.family != Family::CSR) throw InvalidArgument("distance is computed for CSR graphs only");
    const Vertex u = parse_vertex(o.from), v = parse_vertex(o.to);
    const auto d = csr_distance(spec, u, v, o.limits);
    Json rec{{"record", "distance"}, {"spec", spec_json(spec)}, {"from", vertex_json(u)}, {"to", vertex_json(v)},
             {"distance", d.distance}, {"tau", spec.m - d.distance}, {"witness", d.witness.blocks}};
    bool discrepancy = false;
    if (o.bfs) {
        const Graph g(spec, o.limits);
        const int b = oracle_distances(g, g.index_of(u))[g.index_of(v)];
        rec["bfs"] = b;
        discrepancy = b != d.distance;
    }
    emit(out, rec);
    return finish(discrepancy, o);
}

int cmd_aut(const Options& o, std::ostream& out) {
    if (o.m < 1 || o.n < 1) throw InvalidArgument("aut needs -m and -n (both positive)");
    const GraphSpec spec = csr(o.m, o.n);
    const BigInt formula = group_order_formula(o.m, o.n);
    const bool hypothesis = within_aut_hypothesis(o.m, o.n);
    std::optional<Graph> g;
    if (o.scan) g.emplace(spec, o.limits);
    DescriptorEnumerator it(o.m, o.n);
    std::uint64_t enumerated = 0, failed_scan = 0;
    while (auto desc = it.next()) {
        ++enumerated;
        if (!o.count_only)
            emit(out, Json{{"record", "descriptor"}, {"sigma", desc->sigma_string()}, {"c", desc->c}, {"d", desc->d}});
        if (g) {
            for (std::size_t i = 0; i < g->size(); ++i) {
                const Vertex img = rooklab::apply(*desc, g->vertex(i));
                const std::size_t ii = g->index_of(img);
                bool ok = true;
                for (auto j : g->neighbors(i))
                    if (!g->adjacent(ii, g->index_of(rooklab::apply(*desc, g->vertex(j))))) {
                        ok = false;
                        break;
                    }
                if (!ok) {
                    ++failed_scan;
                    break;
                }
            }
        }
    }
    Json rec{{"record", "aut"}, {"spec", spec_json(spec)}, {"order_formula", formula.str()},
             {"enumerated", enumerated}, {"within_hypothesis", hypothesis}};
    if (!hypothesis) rec["note"] = "outside the n > 3, m > 3 hypothesis: oracle comparison is informational";
    bool discrepancy = BigInt(enumerated) != formula || failed_scan > 0;
    if (o.scan) rec["descriptors_failing_scan"] = failed_scan;
    if (o.aut_oracle) {
        const auto count = oracle_aut_count(spec, o.limits);
        rec["oracle_count"] = count;
        rec["agrees"] = BigInt(count) == formula;
        if (hypothesis && BigInt(count) != formula) discrepancy = true;
    }
    emit(out, rec);
    return finish(discrepancy, o);
}

int cmd_reduce(const Options& o, std::ostream& out) {
    std::ifstream f(o.instance);
    if (!f) throw InvalidArgument("cannot open instance file '" + o.instance + "'");
    const auto inst = read_instance(f);
    const auto enc = encode(inst);
    const Vertex origin(enc.vertex.size(), 0);
    const auto d = csr_distance(enc.spec, origin, enc.vertex, o.limits);
    const bool answer = decode(inst, d.distance);
    const auto solved = solve_three_partition(inst);
    Json rec{{"record", "reduction"}, {"k", inst.k}, {"s", inst.s}, {"spec", spec_json(enc.spec)},
             {"vertex", vertex_json(enc.vertex)}, {"distance", d.distance}, {"tau", enc.spec.m - d.distance},
             {"zero_partition", d.witness.blocks}, {"answer", answer}, {"solver_answer", solved.has_value()},
             {"agree", answer == solved.has_value()}};
    if (solved) rec["triples"] = *solved;
    emit(out, rec);
    return finish(answer != solved.has_value(), o);
}

void add_graph_options(CLI::App* cmd, Options& o, bool family = true) {
    if (family) cmd->add_option("--family", o.family, "graph family: sr or csr");
    cmd->add_option("-m", o.m, "number of coordinates");
    cmd->add_option("-n", o.n, "side length (SR) or modulus (CSR)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"rooklab: simplicial rook graphs SR(m,n) and cyclic simplicial rook graphs CSR(m,n)"};
    app.name("rooklab");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--strict", o.strict, "exit 3 when any discrepancy is found");
    app.add_option("--enum-cap", o.limits.enum_cap, "max vertices enumerated")->envname("ROOKLAB_ENUM_CAP");
    app.add_option("--eig-cap", o.limits.eig_cap, "max vertices for dense eigensolves")->envname("ROOKLAB_EIG_CAP");
    app.add_option("--mask-limit", o.limits.mask_limit, "max coordinates for the zero-partition DP")
        ->envname("ROOKLAB_MASK_LIMIT");
    app.add_option("--tol", o.limits.tol, "integrality tolerance")->envname("ROOKLAB_TOL");
    app.add_option("--search-cap", o.limits.search_cap, "max vertices for exact alpha/gamma/omega/chi");
    app.add_option("--aut-cap", o.limits.aut_cap, "max vertices for automorphism backtracking");

    std::function<int()> action;

    auto* gen = app.add_subcommand("generate", "write the edge list of a graph");
    add_graph_options(gen, o);
    gen->add_option("--edges-out", o.edges_out, "output path (stdout when omitted)");
    gen->callback([&] { action = [&] { return cmd_generate(o, out); }; });

    auto* an = app.add_subcommand("analyze", "compute invariants, bounds and oracle cross-checks");
    add_graph_options(an, o);
    an->add_option("--oracle", o.oracle, "all, none, or a comma list of alpha,gamma,omega,chi,diameter,spectrum");
    an->add_option("--json", o.json_path, "also write the full report document here");
    an->callback([&] { action = [&] { return cmd_analyze(o, out); }; });

    auto* con = app.add_subcommand("construct", "run a construction with its built-in verification");
    con->require_subcommand(1);
    struct Kind {
        const char* name;
        const char* help;
        int (*fn)(const Options&, std::ostream&);
    };
    const Kind kinds[] = {
        {"independent-set", "residue-class independent sets", cmd_independent_set},
        {"dominating-set", "dominating set {x : x1 = x2} of SR(m,n)", cmd_dominating_set},
        {"hamiltonian-cycle", "recursive Hamiltonian cycle of SR(m,n)", cmd_hamiltonian_cycle},
        {"clique", "maximum-clique construction for CSR(m,n)", cmd_clique},
        {"coloring", "residue coloring with p colors", cmd_coloring},
    };
    for (const auto& k : kinds) {
        auto* sub = con->add_subcommand(k.name, k.help);
        add_graph_options(sub, o);
        sub->add_option("--p", o.p, "prime modulus for residue classes");
        if (std::string(k.name) == "hamiltonian-cycle")
            sub->add_option("--cycle-out", o.cycle_out, "write the cycle, one vertex per line");
        if (std::string(k.name) == "dominating-set")
            sub->add_flag("--conjectured", o.conjectured, "use {(i,i,n-2i)} in SR(3,n)");
        if (std::string(k.name) == "dominating-set" || std::string(k.name) == "clique")
            sub->add_flag("--oracle", o.with_oracle, "compare with the exact oracle");
        auto fn = k.fn;
        sub->callback([&, fn] { action = [&, fn] { return fn(o, out); }; });
    }

    auto* dist = app.add_subcommand("distance", "CSR distance with its zero-partition witness");
    add_graph_options(dist, o);
    dist->add_option("--from", o.from, "source vertex, comma separated")->required();
    dist->add_option("--to", o.to, "target vertex, comma separated")->required();
    dist->add_flag("--bfs", o.bfs, "cross-check with breadth-first search");
    dist->callback([&] { action = [&] { return cmd_distance(o, out); }; });

    auto* aut = app.add_subcommand("aut", "automorphism group of CSR(m,n)");
    add_graph_options(aut, o, false);
    aut->add_flag("--count-only", o.count_only, "do not dump descriptors");
    aut->add_flag("--oracle", o.aut_oracle, "count automorphisms by backtracking");
    aut->add_flag("--scan", o.scan, "check every descriptor preserves adjacency");
    aut->callback([&] { action = [&] { return cmd_aut(o, out); }; });

    auto* red = app.add_subcommand("reduce-3partition", "encode a 3-Partition instance as a CSR distance query");
    red->add_option("--instance", o.instance, "instance file: 'k s' then 3k integers")->required();
    red->callback([&] { action = [&] { return cmd_reduce(o, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        return action ? action() : kUsage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace rooklab::cli
