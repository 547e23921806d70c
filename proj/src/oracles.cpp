#include "rooklab/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace rooklab {

namespace {

void check_search_cap(const Graph& g, const Limits& limits, const char* what) {
    if (g.size() > limits.search_cap)
        throw CapExceeded(std::string(what) + " oracle on " + g.spec().name() + ": " + std::to_string(g.size()) +
                          " vertices exceeds the search cap of " + std::to_string(limits.search_cap));
}

std::vector<Vertex> to_vertices(const Graph& g, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    std::vector<Vertex> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(g.vertex(i));
    return out;
}

// Maximum clique over adjacency rows, coloring-bounded branch and bound.
class CliqueSearch {
public:
    explicit CliqueSearch(const std::vector<Bitset>& rows) : rows_(rows) {}

    std::vector<std::size_t> run() {
        const std::size_t size = rows_.size();
        if (size == 0) return {};
        Bitset all(size);
        all.set_all();
        // Greedy seed: repeatedly take the candidate with most candidate neighbours.
        Bitset cand = all;
        while (cand.any()) {
            std::size_t pick = cand.first(), best_deg = 0;
            cand.for_each([&](std::size_t v) {
                const std::size_t d = rows_[v].count_and(cand);
                if (d > best_deg) best_deg = d, pick = v;
            });
            best_.push_back(pick);
            cand &= rows_[pick];
        }
        expand(all);
        return best_;
    }

private:
    void color_order(const Bitset& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
        Bitset uncolored = cand;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset q = uncolored;
            while (q.any()) {
                const std::size_t v = q.first();
                q.reset(v);
                q.and_not(rows_[v]);
                uncolored.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(Bitset cand) {
        std::vector<std::size_t> order, bound;
        color_order(cand, order, bound);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current_.size() + bound[k] <= best_.size()) return;
            const std::size_t v = order[k];
            current_.push_back(v);
            Bitset next = cand & rows_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            cand.reset(v);
        }
    }

    const std::vector<Bitset>& rows_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

// Minimum dominating set as a set-cover search over closed neighbourhoods.
// Branching picks the hardest undominated vertex and tries its possible
// dominators in turn; a dominator rejected in one branch is excluded from the
// later siblings so each subset is explored once.
class DominationSearch {
public:
    explicit DominationSearch(const Graph& g) : size_(g.size()) {
        closed_.reserve(size_);
        for (std::size_t v = 0; v < size_; ++v) {
            Bitset c = g.row(v);
            c.set(v);
            closed_.push_back(std::move(c));
        }
        cov_.assign(size_, 0);
    }

    bool solve(std::size_t budget, std::vector<std::size_t>& out) {
        Bitset undominated(size_), allowed(size_);
        undominated.set_all();
        allowed.set_all();
        chosen_.clear();
        if (!dfs(undominated, allowed, budget)) return false;
        out = chosen_;
        return true;
    }

    std::vector<std::size_t> greedy() const {
        Bitset undominated(size_);
        undominated.set_all();
        std::vector<std::size_t> pick;
        while (undominated.any()) {
            std::size_t best = 0, best_cov = 0;
            for (std::size_t c = 0; c < size_; ++c) {
                const std::size_t cv = closed_[c].count_and(undominated);
                if (cv > best_cov) best_cov = cv, best = c;
            }
            pick.push_back(best);
            undominated.and_not(closed_[best]);
        }
        return pick;
    }

private:
    bool dfs(const Bitset& undominated, Bitset allowed, std::size_t budget) {
        if (undominated.none()) return true;
        if (budget == 0) return false;

        // Coverage of every allowed dominator that can still help.
        Bitset useful(size_);
        undominated.for_each([&](std::size_t u) { useful |= closed_[u]; });
        useful &= allowed;
        std::vector<std::size_t> covs;
        useful.for_each([&](std::size_t c) {
            cov_[c] = closed_[c].count_and(undominated);
            covs.push_back(cov_[c]);
        });

        const std::size_t remaining = undominated.count();
        if (covs.size() < budget) {
            std::size_t total = std::accumulate(covs.begin(), covs.end(), std::size_t{0});
            if (total < remaining) return false;
        } else {
            std::partial_sort(covs.begin(), covs.begin() + static_cast<std::ptrdiff_t>(budget), covs.end(),
                              std::greater<>());
            std::size_t top = std::accumulate(covs.begin(), covs.begin() + static_cast<std::ptrdiff_t>(budget),
                                              std::size_t{0});
            if (top < remaining) return false;
        }

        // Each chosen dominator c covers sum_{u in N[c]} 1/maxcov(u) <= 1, so the
        // sum over all undominated u bounds the number of dominators needed.
        double lower = 0.0;
        std::size_t branch_vertex = size_, branch_cands = size_ + 1, branch_maxcov = size_ + 1;
        bool dead = false;
        undominated.for_each([&](std::size_t u) {
            if (dead) return;
            std::size_t maxcov = 0, cands = 0;
            closed_[u].for_each([&](std::size_t c) {
                if (!allowed.test(c)) return;
                ++cands;
                maxcov = std::max(maxcov, cov_[c]);
            });
            if (cands == 0) {
                dead = true;
                return;
            }
            lower += 1.0 / static_cast<double>(maxcov);
            if (cands < branch_cands || (cands == branch_cands && maxcov < branch_maxcov)) {
                branch_vertex = u;
                branch_cands = cands;
                branch_maxcov = maxcov;
            }
        });
        if (dead || lower > static_cast<double>(budget) + 1e-9) return false;

        std::vector<std::size_t> cands;
        closed_[branch_vertex].for_each([&](std::size_t c) {
            if (allowed.test(c)) cands.push_back(c);
        });
        std::stable_sort(cands.begin(), cands.end(),
                         [&](std::size_t a, std::size_t b) { return cov_[a] > cov_[b]; });

        for (std::size_t c : cands) {
            chosen_.push_back(c);
            Bitset next = undominated;
            next.and_not(closed_[c]);
            allowed.reset(c);
            if (dfs(next, allowed, budget - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    std::size_t size_;
    std::vector<Bitset> closed_;
    std::vector<std::size_t> cov_;
    std::vector<std::size_t> chosen_;
};

// k-colorability by DSATUR-ordered backtracking; a fresh color is only ever
// the next unused one.
class ColoringSearch {
public:
    explicit ColoringSearch(const Graph& g) : g_(g), colors_(g.size(), -1) {}

    bool colorable(std::size_t k) {
        std::fill(colors_.begin(), colors_.end(), -1);
        k_ = static_cast<int>(k);
        return assign(0, 0);
    }
    const std::vector<int>& colors() const { return colors_; }

private:
    bool assign(std::size_t done, int used) {
        if (done == g_.size()) return true;
        std::size_t pick = g_.size();
        int best_sat = -1, best_deg = -1;
        std::vector<char> seen(static_cast<std::size_t>(k_), 0);
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (colors_[v] >= 0) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0, deg = 0;
            for (auto w : g_.neighbors(v)) {
                const int c = colors_[w];
                if (c < 0) {
                    ++deg;
                } else if (!seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = 1;
                    ++sat;
                }
            }
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        if (best_sat >= k_) return false;
        const int limit = std::min(k_, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (auto w : g_.neighbors(pick))
                if (colors_[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            colors_[pick] = c;
            if (assign(done + 1, std::max(used, c + 1))) return true;
            colors_[pick] = -1;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> colors_;
    int k_ = 0;
};

std::vector<Bitset> complement_rows(const Graph& g) {
    std::vector<Bitset> rows;
    rows.reserve(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        Bitset r(g.size());
        r.set_all();
        r.and_not(g.row(v));
        r.reset(v);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

OracleResult oracle_alpha(const Graph& g, const Limits& limits) {
    check_search_cap(g, limits, "alpha");
    const auto rows = complement_rows(g);
    auto best = CliqueSearch(rows).run();
    return {best.size(), to_vertices(g, best)};
}

OracleResult oracle_alpha(const GraphSpec& spec, const Limits& limits) { return oracle_alpha(Graph(spec, limits), limits); }

OracleResult oracle_omega(const Graph& g, const Limits& limits) {
    check_search_cap(g, limits, "omega");
    std::vector<Bitset> rows;
    for (std::size_t v = 0; v < g.size(); ++v) rows.push_back(g.row(v));
    auto best = CliqueSearch(rows).run();
    return {best.size(), to_vertices(g, best)};
}

OracleResult oracle_omega(const GraphSpec& spec, const Limits& limits) { return oracle_omega(Graph(spec, limits), limits); }

OracleResult oracle_gamma(const Graph& g, const Limits& limits) {
    check_search_cap(g, limits, "gamma");
    if (g.size() == 0) return {};
    DominationSearch search(g);
    auto upper = search.greedy();
    std::size_t max_deg = 0;
    for (std::size_t v = 0; v < g.size(); ++v) max_deg = std::max(max_deg, g.neighbors(v).size());
    const std::size_t lower = (g.size() + max_deg) / (max_deg + 1);
    for (std::size_t k = lower; k < upper.size(); ++k) {
        std::vector<std::size_t> found;
        if (search.solve(k, found)) return {found.size(), to_vertices(g, found)};
    }
    return {upper.size(), to_vertices(g, upper)};
}

OracleResult oracle_gamma(const GraphSpec& spec, const Limits& limits) { return oracle_gamma(Graph(spec, limits), limits); }

ColoringResult oracle_chi(const Graph& g, const Limits& limits) {
    check_search_cap(g, limits, "chi");
    if (g.size() == 0) return {};
    const std::size_t omega = oracle_omega(g, limits).value;
    ColoringSearch search(g);
    for (std::size_t k = std::max<std::size_t>(omega, 1);; ++k)
        if (search.colorable(k)) return {k, search.colors()};
}

ColoringResult oracle_chi(const GraphSpec& spec, const Limits& limits) { return oracle_chi(Graph(spec, limits), limits); }

std::vector<int> oracle_distances(const Graph& g, std::size_t source) {
    std::vector<int> dist(g.size(), -1);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (auto w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<int> oracle_distances(const GraphSpec& spec, const Vertex& source, const Limits& limits) {
    const Graph g(spec, limits);
    return oracle_distances(g, g.index_of(source));
}

int oracle_diameter(const Graph& g) {
    int diam = 0;
    for (std::size_t s = 0; s < g.size(); ++s)
        for (int d : oracle_distances(g, s)) diam = std::max(diam, d);
    return diam;
}

bool is_independent(const GraphSpec& spec, const std::vector<Vertex>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (adjacent(spec, set[i], set[j])) return false;
    return true;
}

bool is_clique(const GraphSpec& spec, const std::vector<Vertex>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (!adjacent(spec, set[i], set[j])) return false;
    return true;
}

bool is_dominating(const Graph& g, const std::vector<Vertex>& set) {
    Bitset covered(g.size());
    for (const auto& v : set) {
        const std::size_t i = g.index_of(v);
        covered.set(i);
        covered |= g.row(i);
    }
    return covered.count() == g.size();
}

CycleVerdict verify_cycle(const GraphSpec& spec, const std::vector<Vertex>& cycle, const Limits& limits) {
    const auto expected = vertex_count(spec);
    for (const auto& v : cycle)
        if (!is_vertex(spec, v)) return {false, "invalid vertex " + format_vertex(v)};
    std::set<Vertex> seen;
    for (const auto& v : cycle)
        if (!seen.insert(v).second) return {false, "duplicate vertex " + format_vertex(v)};
    if (BigInt(cycle.size()) != expected)
        return {false, "cycle has " + std::to_string(cycle.size()) + " vertices, graph has " + expected.str()};
    if (BigInt(cycle.size()) > limits.enum_cap) throw CapExceeded("cycle longer than the enumeration cap");
    if (cycle.size() < 3) return {false, "fewer than three vertices"};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % cycle.size()];
        if (!adjacent(spec, a, b)) return {false, "not adjacent: " + format_vertex(a) + " -> " + format_vertex(b)};
    }
    if (spec.family == Family::SR) {
        if (spec.m < 2) return {false, "SR(1,n) has no edges"};
        Vertex x(static_cast<std::size_t>(spec.m), 0), y(static_cast<std::size_t>(spec.m), 0);
        x[0] = spec.n;
        y[0] = spec.n - 1;
        y[1] = 1;
        bool found = false;
        for (std::size_t i = 0; i < cycle.size() && !found; ++i) {
            const auto& a = cycle[i];
            const auto& b = cycle[(i + 1) % cycle.size()];
            found = (a == x && b == y) || (a == y && b == x);
        }
        if (!found) return {false, "missing distinguished edge " + format_vertex(x) + " - " + format_vertex(y)};
    }
    return {true, {}};
}

}  // namespace rooklab
