#ifndef ROOKLAB_METRICS_HPP
#define ROOKLAB_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rooklab/graph.hpp"

namespace rooklab {

using Rational = boost::multiprecision::cpp_rational;

/// Partition of the 1-based coordinate indices into blocks with zero sum mod n.
struct ZeroPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t size() const { return blocks.size(); }
    /// Blocks disjoint, covering [1..m], each summing to 0 mod n.
    bool validates(const Vertex& b, int n) const;
};

struct TauResult {
    int tau = 0;
    ZeroPartition witness;
};

/// Zero partitioning number of a CSR vertex via an O(3^m) subset DP.
/// Throws InvalidArgument if b is not a vertex of CSR(m,n) or m exceeds
/// limits.mask_limit.
TauResult tau(const Vertex& b, int n, const Limits& limits = {});

/// Coordinate-wise (v - u) mod n.
Vertex csr_difference(const Vertex& u, const Vertex& v, int n);

struct DistanceResult {
    int distance = 0;
    ZeroPartition witness;  // zero partition of v - u
};

/// d(u,v) = m - tau(v - u).
DistanceResult csr_distance(const GraphSpec& spec, const Vertex& u, const Vertex& v, const Limits& limits = {});

struct DiameterResult {
    int diameter = 0;
    Vertex witness;  // vertex at that distance from the origin
};

/// m - floor((m-1)/n) - 1, with b = (n-(m-1) mod n, 1, .., 1) as witness.
DiameterResult csr_diameter(int m, int n);
/// min{m-1, n}; 0 for the single-vertex graphs (m = 1 or n = 0).
int sr_diameter(int m, int n);

enum class BoundSide { Lower, Upper, Exact };
std::string_view side_name(BoundSide s);

/// One closed-form bound. `value` is exact; `rounded` applies ceil/floor when
/// the quantity is an integer.
struct BoundRecord {
    std::string quantity;  // alpha, gamma, chi, omega, diameter, lambda_min
    BoundSide side = BoundSide::Lower;
    Rational value;
    BigInt rounded;
    std::string formula_tag;
    std::string anchor;
};

struct BoundsReport {
    GraphSpec spec;
    std::int64_t p = 0;
    std::vector<BoundRecord> records;

    std::vector<const BoundRecord*> find(std::string_view quantity) const;
    std::optional<BigInt> tightest(std::string_view quantity, BoundSide side) const;
    /// Quantities whose best lower bound exceeds their best upper bound.
    std::vector<std::string> inconsistencies() const;
};

/// Every closed-form bound for the family, with p = default_residue_prime(spec).
BoundsReport bounds_report(const GraphSpec& spec);

/// max{-n, -C(m,2)}.
std::int64_t sr_lambda_min_formula(int m, int n);

struct GammaRow {
    int n = 0;
    BigInt vertices;
    BigInt lower;              // ceil(|V| / (n(m-1)+1))
    std::size_t gamma = 0;     // oracle
    BigInt construction;       // |D|
    BigInt upper_closed_form;  // floor(C(n+m-1, m-2) / 2)
    bool sandwiched = false;   // lower <= gamma <= |D| <= C(n+m-1,m-2)/2
};

/// Oracle gamma of SR(m,n) against both envelopes for n in [n_lo, n_hi].
std::vector<GammaRow> gamma_order_check(int m, int n_lo, int n_hi, const Limits& limits = {});

}  // namespace rooklab

#endif
