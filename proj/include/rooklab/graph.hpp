#ifndef ROOKLAB_GRAPH_HPP
#define ROOKLAB_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rooklab/bitset.hpp"

namespace rooklab {

using BigInt = boost::multiprecision::cpp_int;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters or malformed input; maps to CLI usage errors.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A configured desk-scale limit would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A construction failed a check that its proof guarantees.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Runtime limits shared by constructions and oracles.
struct Limits {
    std::uint64_t enum_cap = 10'000'000;  // vertices enumerated per graph
    std::size_t eig_cap = 2000;           // dense eigensolver matrix order
    int mask_limit = 22;                  // coordinates in the zero-partition DP
    double tol = 1e-6;                    // integrality tolerance
    std::size_t search_cap = 200;         // vertices for exact alpha/gamma/omega/chi
    std::size_t aut_cap = 128;            // vertices for automorphism backtracking
};

enum class Family { SR, CSR };

std::string_view family_name(Family f);
Family parse_family(std::string_view text);

/// One graph instance: SR(m,n) or CSR(m,n).
struct GraphSpec {
    Family family = Family::SR;
    int m = 1;
    int n = 0;

    /// Throws InvalidArgument unless m >= 1 and n >= 0 (SR) / n >= 1 (CSR).
    void validate() const;
    std::string name() const;

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

GraphSpec sr(int m, int n);
GraphSpec csr(int m, int n);

using Vertex = std::vector<int>;
using Edge = std::pair<Vertex, Vertex>;

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt vertex_count(const GraphSpec& spec);
/// Common degree: n(m-1) for SR, C(m,2)(n-1) for CSR.
std::int64_t regular_degree(const GraphSpec& spec);

bool is_vertex(const GraphSpec& spec, const Vertex& v);
void require_vertex(const GraphSpec& spec, const Vertex& v);

/// All vertices in lexicographic order. Throws CapExceeded above limits.enum_cap.
std::vector<Vertex> enumerate_vertices(const GraphSpec& spec, const Limits& limits = {});

/// True iff u and v differ in exactly two coordinates.
bool adjacent(const GraphSpec& spec, const Vertex& u, const Vertex& v);

/// Neighbors of v, lexicographically sorted.
std::vector<Vertex> neighbors(const GraphSpec& spec, const Vertex& v);

/// Every edge once, smaller endpoint first, sorted by (first, second).
std::vector<Edge> edges(const GraphSpec& spec, const Limits& limits = {});

std::string format_vertex(const Vertex& v);
Vertex parse_vertex(std::string_view text);

/// Writes the `# family=.. m=.. n=..` header followed by `a;b` edge lines.
void write_edge_list(std::ostream& out, const GraphSpec& spec, const Limits& limits = {});

struct EdgeList {
    GraphSpec spec;
    std::vector<Edge> edges;
};
EdgeList read_edge_list(std::istream& in);

/// Materialized graph over the canonical vertex order.
class Graph {
public:
    explicit Graph(const GraphSpec& spec, const Limits& limits = {});

    const GraphSpec& spec() const { return spec_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_[i]; }

    std::optional<std::size_t> find(const Vertex& v) const;
    std::size_t index_of(const Vertex& v) const;

    std::span<const std::uint32_t> neighbors(std::size_t i) const { return adj_lists_[i]; }
    const Bitset& row(std::size_t i) const { return rows_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    std::size_t edge_count() const;

private:
    GraphSpec spec_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::uint32_t>> adj_lists_;
    std::vector<Bitset> rows_;
};

}  // namespace rooklab

#endif
