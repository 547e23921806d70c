#ifndef ROOKLAB_AUTOMORPHISMS_HPP
#define ROOKLAB_AUTOMORPHISMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rooklab/graph.hpp"

namespace rooklab {

/// x -> (c x_{sigma(1)} + d_1, ..., c x_{sigma(m)} + d_m) mod n on CSR(m,n).
/// sigma is stored 0-based: output coordinate i reads input coordinate sigma[i].
struct AutDescriptor {
    int n = 1;
    std::vector<int> sigma;
    int c = 1;
    std::vector<int> d;

    /// Throws InvalidArgument unless sigma is a permutation, gcd(c,n) = 1 and
    /// the offsets sum to 0 mod n.
    void validate() const;
    /// sigma in 1-based one-line notation, e.g. "2,1,3,4".
    std::string sigma_string() const;

    friend bool operator==(const AutDescriptor&, const AutDescriptor&) = default;
};

AutDescriptor identity_descriptor(int m, int n);
Vertex apply(const AutDescriptor& desc, const Vertex& x);

/// Whether (m,n) satisfies n > 3 and m > 3.
bool within_aut_hypothesis(int m, int n);

int euler_phi(int n);
/// m! * phi(n) * n^(m-1).
BigInt group_order_formula(int m, int n);

/// Descriptors in lexicographic order of sigma, then c, then d_1..d_{m-1};
/// d_m closes the sum.
class DescriptorEnumerator {
public:
    DescriptorEnumerator(int m, int n);
    std::optional<AutDescriptor> next();

private:
    int m_, n_;
    std::vector<int> sigma_;
    std::vector<int> units_;
    std::size_t unit_ = 0;
    std::vector<int> prefix_;
    bool done_ = false;
};

/// Number of adjacency-preserving bijections, by backtracking with
/// degree and common-neighbour refinement. Throws CapExceeded above
/// limits.aut_cap vertices.
std::uint64_t oracle_aut_count(const GraphSpec& spec, const Limits& limits = {});

}  // namespace rooklab

#endif
