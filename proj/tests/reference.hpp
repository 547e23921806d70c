// Test-side reference implementations. Deliberately naive and independent of
// the library: own enumeration, own adjacency, plain exhaustive search.
#ifndef ROOKLAB_TESTS_REFERENCE_HPP
#define ROOKLAB_TESTS_REFERENCE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

namespace ref {

using Vec = std::vector<int>;

// Odometer over [0, hi]^m, filtered by the coordinate-sum rule.
inline std::vector<Vec> sr_vertices(int m, int n) {
    std::vector<Vec> out;
    Vec x(m, 0);
    while (true) {
        if (std::accumulate(x.begin(), x.end(), 0) == n) out.push_back(x);
        int i = m - 1;
        while (i >= 0 && x[i] == n) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

inline std::vector<Vec> csr_vertices(int m, int n) {
    std::vector<Vec> out;
    Vec x(m, 0);
    while (true) {
        if (std::accumulate(x.begin(), x.end(), 0) % n == 0) out.push_back(x);
        int i = m - 1;
        while (i >= 0 && x[i] == n - 1) x[i--] = 0;
        if (i < 0) break;
        ++x[i];
    }
    return out;
}

inline bool adj(const Vec& u, const Vec& v) {
    int diff = 0;
    for (std::size_t i = 0; i < u.size(); ++i) diff += u[i] != v[i];
    return diff == 2;
}

struct Dense {
    std::vector<Vec> vs;
    std::vector<std::vector<char>> a;
    std::size_t size() const { return vs.size(); }
};

inline Dense dense(std::vector<Vec> vs) {
    Dense g{std::move(vs), {}};
    const auto N = g.vs.size();
    g.a.assign(N, std::vector<char>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) g.a[i][j] = adj(g.vs[i], g.vs[j]);
    return g;
}

inline std::vector<int> bfs(const Dense& g, std::size_t s) {
    std::vector<int> d(g.size(), -1);
    std::queue<std::size_t> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.a[u][v] && d[v] < 0) {
                d[v] = d[u] + 1;
                q.push(v);
            }
    }
    return d;
}

// Max number of blocks over all set partitions (restricted growth strings)
// with every block summing to 0 mod n.
inline int tau_brute(const Vec& b, int n) {
    const int m = static_cast<int>(b.size());
    if (m == 0) return 0;
    std::vector<int> rgs(m, 0);
    int best = 0;
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == m) {
            std::vector<int> sum(blocks, 0);
            for (int j = 0; j < m; ++j) sum[rgs[j]] += b[j];
            for (int s : sum)
                if (s % n != 0) return;
            best = std::max(best, blocks);
            return;
        }
        for (int c = 0; c <= blocks; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(blocks, c + 1));
        }
    };
    rec(0, 0);
    return best;
}

using Mask = std::uint64_t;

inline std::vector<Mask> masks(const Dense& g) {
    std::vector<Mask> r(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.a[i][j]) r[i] |= Mask{1} << j;
    return r;
}

// alpha(G) = max(alpha(G - v), 1 + alpha(G - N[v])), N <= 64.
inline int alpha_brute(const Dense& g) {
    const auto nb = masks(g);
    std::function<int(Mask)> rec = [&](Mask live) -> int {
        if (!live) return 0;
        int v = __builtin_ctzll(live);
        Mask without = live & ~(Mask{1} << v);
        return std::max(rec(without), 1 + rec(without & ~nb[v]));
    };
    Mask all = g.size() == 64 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
    return rec(all);
}

inline int omega_brute(const Dense& g) {
    const auto nb = masks(g);
    std::function<int(Mask)> rec = [&](Mask cand) -> int {
        if (!cand) return 0;
        int v = __builtin_ctzll(cand);
        Mask without = cand & ~(Mask{1} << v);
        return std::max(rec(without), 1 + rec(without & nb[v]));
    };
    Mask all = g.size() == 64 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
    return rec(all);
}

// Smallest k such that some k-subset dominates; plain combination walk.
inline int gamma_brute(const Dense& g) {
    const auto N = static_cast<int>(g.size());
    auto nb = masks(g);
    for (int i = 0; i < N; ++i) nb[i] |= Mask{1} << i;
    const Mask all = N == 64 ? ~Mask{0} : (Mask{1} << N) - 1;
    for (int k = 1; k <= N; ++k) {
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Mask cov = 0;
            for (int i : idx) cov |= nb[i];
            if (cov == all) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == N - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return 0;
}

// Whether a dominating set of size k exists.
inline bool has_dominating_set_of_size(const Dense& g, int k) {
    const auto N = static_cast<int>(g.size());
    auto nb = masks(g);
    for (int i = 0; i < N; ++i) nb[i] |= Mask{1} << i;
    const Mask all = N == 64 ? ~Mask{0} : (Mask{1} << N) - 1;
    std::function<bool(int, int, Mask)> rec = [&](int start, int left, Mask cov) {
        if (cov == all) return true;
        if (left == 0) return false;
        for (int i = start; i < N; ++i)
            if (rec(i + 1, left - 1, cov | nb[i])) return true;
        return false;
    };
    return rec(0, k, 0);
}

inline int chi_brute(const Dense& g) {
    const auto N = static_cast<int>(g.size());
    for (int k = 1; k <= N; ++k) {
        std::vector<int> col(N, -1);
        std::function<bool(int)> rec = [&](int v) {
            if (v == N) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u) ok = !(g.a[v][u] && col[u] == c);
                if (!ok) continue;
                col[v] = c;
                if (rec(v + 1)) return true;
            }
            col[v] = -1;
            return false;
        };
        if (rec(0)) return k;
    }
    return 0;
}

// Automorphism count by mapping vertices 0..N-1 in order, checking all
// already-mapped pairs. Only for small graphs.
inline std::uint64_t aut_brute(const Dense& g) {
    const auto N = static_cast<int>(g.size());
    std::vector<int> deg(N, 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) deg[i] += g.a[i][j];
    std::vector<int> img(N, -1);
    std::vector<char> used(N, 0);
    std::uint64_t count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == N) {
            ++count;
            return;
        }
        for (int w = 0; w < N; ++w) {
            if (used[w] || deg[w] != deg[v]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = g.a[v][u] == g.a[w][img[u]];
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            rec(v + 1);
            used[w] = 0;
        }
    };
    rec(0);
    return count;
}

inline std::uint64_t triangles(const Dense& g) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.a[i][j])
                for (std::size_t k = j + 1; k < g.size(); ++k) t += g.a[i][k] && g.a[j][k];
    return t;
}

inline long long binom(int n, int k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// 3-Partition by trying every ordered choice of disjoint triples.
inline bool three_partition_brute(const std::vector<int>& a, int s) {
    const int N = static_cast<int>(a.size());
    std::vector<char> used(N, 0);
    std::function<bool()> rec = [&]() {
        int first = 0;
        while (first < N && used[first]) ++first;
        if (first == N) return true;
        used[first] = 1;
        for (int j = first + 1; j < N; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            for (int k = j + 1; k < N; ++k)
                if (!used[k] && a[first] + a[j] + a[k] == s) {
                    used[k] = 1;
                    if (rec()) return true;
                    used[k] = 0;
                }
            used[j] = 0;
        }
        used[first] = 0;
        return false;
    };
    return rec();
}

}  // namespace ref

#endif
