#include "rooklab/constructions.hpp"

#include <algorithm>
#include <map>

#include "rooklab/oracles.hpp"

namespace rooklab {

bool is_prime(std::int64_t k) {
    if (k < 2) return false;
    for (std::int64_t d = 2; d * d <= k; ++d)
        if (k % d == 0) return false;
    return true;
}

std::int64_t smallest_prime_at_least(std::int64_t k) {
    if (k < 1) throw InvalidArgument("smallest_prime_at_least: k must be positive");
    std::int64_t p = std::max<std::int64_t>(k, 2);
    while (!is_prime(p)) ++p;
    return p;
}

std::int64_t default_residue_prime(const GraphSpec& spec) {
    spec.validate();
    if (spec.family == Family::SR) return smallest_prime_at_least(std::max(spec.m, spec.n + 1));
    return smallest_prime_at_least(std::max(spec.m, spec.n));
}

std::int64_t residue_key(const Vertex& v, std::int64_t p) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) k = (k + static_cast<std::int64_t>(i + 1) * v[i]) % p;
    return k;
}

namespace {

std::int64_t checked_prime(const GraphSpec& spec, std::optional<std::int64_t> p) {
    spec.validate();
    const std::int64_t q = p.value_or(default_residue_prime(spec));
    if (!is_prime(q)) throw InvalidArgument("residue modulus " + std::to_string(q) + " is not prime");
    if (q < spec.m) throw InvalidArgument("residue modulus " + std::to_string(q) + " is below m = " + std::to_string(spec.m));
    if (spec.family == Family::SR && q <= spec.n)
        throw InvalidArgument("residue modulus " + std::to_string(q) + " must exceed n = " + std::to_string(spec.n) +
                              " for SR");
    if (spec.family == Family::CSR && q < spec.n)
        throw InvalidArgument("residue modulus " + std::to_string(q) + " is below n = " + std::to_string(spec.n));
    return q;
}

}  // namespace

bool ResidueClassFamily::all_independent() const {
    return std::all_of(independent.begin(), independent.end(), [](bool b) { return b; });
}

std::optional<std::size_t> ResidueClassFamily::best_class() const {
    std::optional<std::size_t> best;
    for (std::size_t t = 0; t < classes.size(); ++t)
        if (independent[t] && (!best || classes[t].size() > classes[*best].size())) best = t;
    return best;
}

ResidueClassFamily residue_independent_family(const GraphSpec& spec, std::optional<std::int64_t> p, const Limits& limits) {
    ResidueClassFamily fam;
    fam.spec = spec;
    fam.p = checked_prime(spec, p);
    fam.classes.resize(static_cast<std::size_t>(fam.p));
    for (auto& v : enumerate_vertices(spec, limits))
        fam.classes[static_cast<std::size_t>(residue_key(v, fam.p))].push_back(std::move(v));
    fam.independent.reserve(fam.classes.size());
    for (std::size_t t = 0; t < fam.classes.size(); ++t) {
        const bool ok = is_independent(spec, fam.classes[t]);
        if (!ok && spec.family == Family::SR)
            throw InternalError("residue class " + std::to_string(t) + " mod " + std::to_string(fam.p) + " of " +
                                spec.name() + " is not independent");
        fam.independent.push_back(ok);
    }
    return fam;
}

SrDominatingSet::SrDominatingSet(int m, int n, const Limits& limits) : spec_(sr(m, n)) {
    if (m < 3) throw InvalidArgument("dominating set construction needs m >= 3, got " + spec_.name());
    for (auto& v : enumerate_vertices(spec_, limits))
        if (v[0] == v[1]) members_.push_back(std::move(v));
}

Vertex SrDominatingSet::witness(const Vertex& v) const {
    require_vertex(spec_, v);
    Vertex w = v;
    if (v[0] == v[1]) return w;
    const int low = std::min(v[0], v[1]);
    w[0] = low;
    w[1] = low;
    w[2] = v[2] + std::max(v[0], v[1]) - low;
    return w;
}

BigInt SrDominatingSet::formula_size() const {
    const std::int64_t m = spec_.m, n = spec_.n;
    BigInt total = 0;
    for (std::int64_t i = 0; i <= n / 2; ++i) total += binomial(n + m - 3 - 2 * i, m - 3);
    return total;
}

BigInt SrDominatingSet::twice_upper_bound() const { return binomial(spec_.n + spec_.m - 1, spec_.m - 2); }

SrDominatingSet dominating_set_sr(int m, int n, const Limits& limits) { return SrDominatingSet(m, n, limits); }

ConjecturedDominatingSet conjectured_dominating_set_sr3(int n, bool with_oracle, const Limits& limits) {
    const GraphSpec spec = sr(3, n);
    ConjecturedDominatingSet out;
    for (int i = 0; 2 * i <= n; ++i) out.members.push_back({i, i, n - 2 * i});
    const Graph g(spec, limits);
    out.dominates = is_dominating(g, out.members);
    if (with_oracle && g.size() <= limits.search_cap) {
        out.oracle_gamma = oracle_gamma(g, limits).value;
        out.matches_oracle = *out.oracle_gamma == out.members.size();
    }
    return out;
}

namespace {

using CycleMemo = std::map<std::pair<int, int>, std::vector<Vertex>>;

// Cycle of SR(m,n) starting (n,0..0), (n-1,1,0..0). SR(2,1) comes back as the
// two-vertex path, which is all the inductive step needs from it.
const std::vector<Vertex>& build_cycle(int m, int n, CycleMemo& memo) {
    if (auto it = memo.find({m, n}); it != memo.end()) return it->second;
    std::vector<Vertex> seq;
    const auto dim = static_cast<std::size_t>(m);
    if (m == 2) {
        for (int a = n; a >= 0; --a) seq.push_back({a, n - a});
    } else if (n == 1) {
        for (std::size_t i = 0; i < dim; ++i) {
            Vertex e(dim, 0);
            e[i] = 1;
            seq.push_back(std::move(e));
        }
    } else {
        Vertex top(dim, 0);
        top[0] = n;
        seq.push_back(top);
        // Paths P_n, ..., P_1: layer k has first coordinate n-k and runs from
        // (n-k,k,0..) to (n-k,k-1,1,0..); consecutive layers meet along the
        // connector (n-k,k-1,1,0..)(n-k+1,k-1,0..).
        for (int k = n; k >= 1; --k) {
            const auto& sub = build_cycle(m - 1, k, memo);
            auto lift = [&](const Vertex& u) {
                Vertex w;
                w.reserve(dim);
                w.push_back(n - k);
                w.insert(w.end(), u.begin(), u.end());
                return w;
            };
            seq.push_back(lift(sub[0]));
            for (std::size_t i = sub.size() - 1; i >= 1; --i) seq.push_back(lift(sub[i]));
        }
        // The sequence closes through (n-1,0,1,0..)(n,0..0); swapping the second
        // and third coordinates turns that into the distinguished edge.
        for (auto& v : seq) std::swap(v[1], v[2]);
        std::reverse(seq.begin() + 1, seq.end());
    }
    return memo.emplace(std::pair{m, n}, std::move(seq)).first->second;
}

}  // namespace

HamiltonianCycle hamiltonian_cycle_sr(int m, int n, const Limits& limits) {
    const GraphSpec spec = sr(m, n);
    if (m == 1) throw InvalidArgument("no Hamiltonian cycle: SR(1," + std::to_string(n) + ") is a single vertex");
    if (m == 2 && n == 1) throw InvalidArgument("no Hamiltonian cycle: SR(2,1) is a single edge");
    if (n == 0) throw InvalidArgument("no Hamiltonian cycle: " + spec.name() + " is a single vertex");
    if (vertex_count(spec) > limits.enum_cap)
        throw CapExceeded(spec.name() + " exceeds the enumeration cap of " + std::to_string(limits.enum_cap));
    CycleMemo memo;
    return {spec, build_cycle(m, n, memo)};
}

Clique max_clique_csr(int m, int n, const Limits& limits) {
    const GraphSpec spec = csr(m, n);
    if (m < 2 || n < 2) throw InvalidArgument("clique construction needs m, n >= 2, got " + spec.name());
    if (vertex_count(spec) > limits.enum_cap)
        throw CapExceeded(spec.name() + " exceeds the enumeration cap of " + std::to_string(limits.enum_cap));
    Clique out;
    const auto dim = static_cast<std::size_t>(m);
    if (n >= m) {
        out.kind = CliqueKind::Coset;
        for (int c = 0; c < n; ++c) {
            Vertex v(dim, 0);
            v[0] = c;
            v[1] = (n - c) % n;
            out.members.push_back(std::move(v));
        }
    } else {
        out.kind = CliqueKind::Core;
        Vertex xi(dim, 0);
        xi[0] = n - 1;
        for (std::size_t a = 0; a < dim; ++a) {
            Vertex v = xi;
            v[a] = (v[a] + 1) % n;
            out.members.push_back(std::move(v));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    for (const auto& v : out.members)
        if (!is_vertex(spec, v)) throw InternalError("clique member " + format_vertex(v) + " outside " + spec.name());
    if (!is_clique(spec, out.members)) throw InternalError("constructed clique of " + spec.name() + " is not a clique");
    return out;
}

Coloring residue_coloring(const GraphSpec& spec, std::optional<std::int64_t> p, const Limits& limits) {
    Coloring out;
    out.spec = spec;
    out.p = checked_prime(spec, p);
    const Graph g(spec, limits);
    out.vertices = g.vertices();
    out.colors.reserve(g.size());
    for (const auto& v : out.vertices) out.colors.push_back(static_cast<int>(residue_key(v, out.p)));
    out.proper = true;
    for (std::size_t i = 0; i < g.size() && out.proper; ++i)
        for (auto j : g.neighbors(i))
            if (i < j && out.colors[i] == out.colors[j]) {
                out.proper = false;
                out.conflict = Edge{g.vertex(i), g.vertex(j)};
                break;
            }
    return out;
}

Coloring proper_coloring_csr(int m, int n, std::optional<std::int64_t> p, const Limits& limits) {
    return residue_coloring(csr(m, n), p, limits);
}

}  // namespace rooklab
