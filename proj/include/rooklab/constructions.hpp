#ifndef ROOKLAB_CONSTRUCTIONS_HPP
#define ROOKLAB_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "rooklab/graph.hpp"

namespace rooklab {

bool is_prime(std::int64_t k);
/// Least prime p >= k, by trial division.
std::int64_t smallest_prime_at_least(std::int64_t k);

/// Default modulus for the residue classes. SR needs p >= m and p > n (a
/// coordinate can move by a full n, so p = n would put (n,0,..) and (0,n,..)
/// in one class); CSR uses the least prime >= max(m, n).
std::int64_t default_residue_prime(const GraphSpec& spec);

/// Weighted coordinate sum sum_i i*a_i (1-based i) reduced mod p.
std::int64_t residue_key(const Vertex& v, std::int64_t p);

/// Vertices split by residue_key. Each class carries the verdict of a full
/// pairwise adjacency scan.
struct ResidueClassFamily {
    GraphSpec spec;
    std::int64_t p = 0;
    std::vector<std::vector<Vertex>> classes;  // classes[t] has key t
    std::vector<bool> independent;

    bool all_independent() const;
    /// Smallest index among the largest classes that passed the scan; nullopt if none passed.
    std::optional<std::size_t> best_class() const;
};

/// Throws InvalidArgument if p is not prime or violates the family's bound,
/// InternalError if an SR class fails its scan.
ResidueClassFamily residue_independent_family(const GraphSpec& spec, std::optional<std::int64_t> p = std::nullopt,
                                              const Limits& limits = {});

/// D = {x : x_1 = x_2} in SR(m,n), m >= 3.
class SrDominatingSet {
public:
    SrDominatingSet(int m, int n, const Limits& limits = {});

    const std::vector<Vertex>& members() const { return members_; }
    /// v itself when v is in D, otherwise the neighbour of v in D obtained by
    /// levelling the first two coordinates and moving the excess into the third.
    Vertex witness(const Vertex& v) const;
    /// sum_{i=0}^{floor(n/2)} C(n+m-3-2i, m-3).
    BigInt formula_size() const;
    /// C(n+m-1, m-2) / 2, kept doubled to stay integral.
    BigInt twice_upper_bound() const;

private:
    GraphSpec spec_;
    std::vector<Vertex> members_;
};

SrDominatingSet dominating_set_sr(int m, int n, const Limits& limits = {});

struct ConjecturedDominatingSet {
    std::vector<Vertex> members;  // (i, i, n-2i), i ascending
    bool dominates = false;
    std::optional<std::size_t> oracle_gamma;  // filled when the oracle ran
    std::optional<bool> matches_oracle;
};

/// {(i,i,n-2i)} in SR(3,n), scanned for domination; runs the gamma oracle when
/// `with_oracle` and the graph fits the search cap.
ConjecturedDominatingSet conjectured_dominating_set_sr3(int n, bool with_oracle = true, const Limits& limits = {});

/// Vertex sequence, closed cyclically.
struct HamiltonianCycle {
    GraphSpec spec;
    std::vector<Vertex> vertices;
};

/// Recursive Hamiltonian cycle of SR(m,n) through (n,0..0)(n-1,1,0..0).
/// Starts at (n,0..0) and visits (n-1,1,0..0) second.
HamiltonianCycle hamiltonian_cycle_sr(int m, int n, const Limits& limits = {});

enum class CliqueKind { Coset, Core };

struct Clique {
    CliqueKind kind = CliqueKind::Coset;
    std::vector<Vertex> members;  // canonical order
};

/// Clique of size max{n,m} in CSR(m,n): 0 + S_12 when n >= m, otherwise
/// xi + {e_a} with xi = (n-1, 0, .., 0).
Clique max_clique_csr(int m, int n, const Limits& limits = {});

struct Coloring {
    GraphSpec spec;
    std::int64_t p = 0;
    std::vector<Vertex> vertices;  // canonical order
    std::vector<int> colors;       // residue_key of each vertex
    bool proper = false;
    std::optional<Edge> conflict;  // first monochromatic edge found
};

/// Colors each vertex by residue_key mod p and scans every edge.
Coloring residue_coloring(const GraphSpec& spec, std::optional<std::int64_t> p = std::nullopt, const Limits& limits = {});
Coloring proper_coloring_csr(int m, int n, std::optional<std::int64_t> p = std::nullopt, const Limits& limits = {});

}  // namespace rooklab

#endif
