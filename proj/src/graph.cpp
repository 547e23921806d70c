#include "rooklab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace rooklab {

std::string_view family_name(Family f) { return f == Family::SR ? "SR" : "CSR"; }

Family parse_family(std::string_view text) {
    if (text == "sr" || text == "SR") return Family::SR;
    if (text == "csr" || text == "CSR") return Family::CSR;
    throw InvalidArgument("unknown graph family '" + std::string(text) + "' (expected sr or csr)");
}

void GraphSpec::validate() const {
    if (m < 1) throw InvalidArgument(name() + ": m must be at least 1");
    if (family == Family::SR && n < 0) throw InvalidArgument(name() + ": n must be nonnegative");
    if (family == Family::CSR && n < 1) throw InvalidArgument(name() + ": modulus n must be at least 1");
}

std::string GraphSpec::name() const {
    return std::string(family_name(family)) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

GraphSpec sr(int m, int n) {
    GraphSpec s{Family::SR, m, n};
    s.validate();
    return s;
}

GraphSpec csr(int m, int n) {
    GraphSpec s{Family::CSR, m, n};
    s.validate();
    return s;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt vertex_count(const GraphSpec& spec) {
    spec.validate();
    if (spec.family == Family::SR) return binomial(spec.n + spec.m - 1, spec.n);
    return boost::multiprecision::pow(BigInt(spec.n), static_cast<unsigned>(spec.m - 1));
}

std::int64_t regular_degree(const GraphSpec& spec) {
    spec.validate();
    const std::int64_t m = spec.m, n = spec.n;
    if (spec.family == Family::SR) return n * (m - 1);
    return m * (m - 1) / 2 * (n - 1);
}

bool is_vertex(const GraphSpec& spec, const Vertex& v) {
    if (static_cast<int>(v.size()) != spec.m) return false;
    std::int64_t sum = 0;
    for (int x : v) {
        if (x < 0) return false;
        if (spec.family == Family::CSR && x >= spec.n) return false;
        sum += x;
    }
    if (spec.family == Family::SR) return sum == spec.n;
    return sum % spec.n == 0;
}

void require_vertex(const GraphSpec& spec, const Vertex& v) {
    if (static_cast<int>(v.size()) != spec.m)
        throw InvalidArgument("vertex " + format_vertex(v) + " has " + std::to_string(v.size()) +
                              " coordinates, " + spec.name() + " needs " + std::to_string(spec.m));
    if (!is_vertex(spec, v)) throw InvalidArgument(format_vertex(v) + " is not a vertex of " + spec.name());
}

namespace {

void check_cap(const GraphSpec& spec, const Limits& limits) {
    if (vertex_count(spec) > limits.enum_cap)
        throw CapExceeded(spec.name() + " has " + vertex_count(spec).str() + " vertices, above the enumeration cap of " +
                          std::to_string(limits.enum_cap));
}

void compositions(Vertex& cur, int pos, int remaining, std::vector<Vertex>& out) {
    const int m = static_cast<int>(cur.size());
    if (pos == m - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int x = 0; x <= remaining; ++x) {
        cur[pos] = x;
        compositions(cur, pos + 1, remaining - x, out);
    }
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const GraphSpec& spec, const Limits& limits) {
    spec.validate();
    check_cap(spec, limits);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(vertex_count(spec)));
    Vertex cur(static_cast<std::size_t>(spec.m), 0);
    if (spec.family == Family::SR) {
        compositions(cur, 0, spec.n, out);
        return out;
    }
    // The first m-1 residues are free; the last one closes the sum. Counting the
    // prefix as a base-n odometer keeps the output lexicographic.
    const int n = spec.n;
    const int free = spec.m - 1;
    while (true) {
        int sum = 0;
        for (int i = 0; i < free; ++i) sum += cur[i];
        cur[free] = (n - sum % n) % n;
        out.push_back(cur);
        int i = free - 1;
        while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

bool adjacent(const GraphSpec& spec, const Vertex& u, const Vertex& v) {
    if (static_cast<int>(u.size()) != spec.m || static_cast<int>(v.size()) != spec.m)
        throw InvalidArgument("dimension mismatch: " + format_vertex(u) + " vs " + format_vertex(v) + " in " +
                              spec.name());
    int diff = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i] && ++diff > 2) return false;
    return diff == 2;
}

std::vector<Vertex> neighbors(const GraphSpec& spec, const Vertex& v) {
    require_vertex(spec, v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(regular_degree(spec)));
    const int m = spec.m;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (spec.family == Family::SR) {
                // Shift t units from j to i (t > 0) or from i to j (t < 0).
                for (int t = -v[i]; t <= v[j]; ++t) {
                    if (t == 0) continue;
                    Vertex w = v;
                    w[i] += t;
                    w[j] -= t;
                    out.push_back(std::move(w));
                }
            } else {
                for (int t = 1; t < spec.n; ++t) {
                    Vertex w = v;
                    w[i] = (w[i] + t) % spec.n;
                    w[j] = (w[j] - t + spec.n) % spec.n;
                    out.push_back(std::move(w));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> edges(const GraphSpec& spec, const Limits& limits) {
    std::vector<Edge> out;
    for (const auto& v : enumerate_vertices(spec, limits))
        for (auto& w : neighbors(spec, v))
            if (v < w) out.emplace_back(v, std::move(w));
    // Vertices arrive sorted and neighbor lists are sorted, so `out` already is.
    return out;
}

std::string format_vertex(const Vertex& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

Vertex parse_vertex(std::string_view text) {
    Vertex v;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        int x = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw InvalidArgument("malformed vertex '" + std::string(text) + "'");
        v.push_back(x);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return v;
}

void write_edge_list(std::ostream& out, const GraphSpec& spec, const Limits& limits) {
    const auto es = edges(spec, limits);
    out << "# family=" << family_name(spec.family) << " m=" << spec.m << " n=" << spec.n << '\n';
    for (const auto& [a, b] : es) out << format_vertex(a) << ';' << format_vertex(b) << '\n';
}

EdgeList read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InvalidArgument("edge list: missing header");
    std::istringstream header(line);
    std::string hash, fam, ms, ns;
    header >> hash >> fam >> ms >> ns;
    if (hash != "#" || fam.rfind("family=", 0) != 0 || ms.rfind("m=", 0) != 0 || ns.rfind("n=", 0) != 0)
        throw InvalidArgument("edge list: malformed header '" + line + "'");
    EdgeList el;
    try {
        el.spec = GraphSpec{parse_family(fam.substr(7)), std::stoi(ms.substr(2)), std::stoi(ns.substr(2))};
    } catch (const std::logic_error&) {
        throw InvalidArgument("edge list: malformed header '" + line + "'");
    }
    el.spec.validate();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto semi = line.find(';');
        if (semi == std::string::npos) throw InvalidArgument("edge list: malformed line '" + line + "'");
        Edge e{parse_vertex(std::string_view(line).substr(0, semi)), parse_vertex(std::string_view(line).substr(semi + 1))};
        require_vertex(el.spec, e.first);
        require_vertex(el.spec, e.second);
        if (!adjacent(el.spec, e.first, e.second)) throw InvalidArgument("edge list: '" + line + "' is not an edge");
        el.edges.push_back(std::move(e));
    }
    return el;
}

Graph::Graph(const GraphSpec& spec, const Limits& limits) : spec_(spec), vertices_(enumerate_vertices(spec, limits)) {
    const std::size_t size = vertices_.size();
    adj_lists_.resize(size);
    rows_.assign(size, Bitset(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (const auto& w : rooklab::neighbors(spec_, vertices_[i])) {
            const auto j = static_cast<std::uint32_t>(index_of(w));
            adj_lists_[i].push_back(j);
            rows_[i].set(j);
        }
    }
}

std::optional<std::size_t> Graph::find(const Vertex& v) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::index_of(const Vertex& v) const {
    if (auto i = find(v)) return *i;
    throw InvalidArgument(format_vertex(v) + " is not a vertex of " + spec_.name());
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& l : adj_lists_) twice += l.size();
    return twice / 2;
}

}  // namespace rooklab
