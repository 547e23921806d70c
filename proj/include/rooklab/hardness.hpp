#ifndef ROOKLAB_HARDNESS_HPP
#define ROOKLAB_HARDNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rooklab/graph.hpp"

namespace rooklab {

/// 3k integers with s/4 < a_i < s/2 and sum k*s.
struct ThreePartitionInstance {
    int k = 0;
    int s = 0;
    std::vector<int> a;

    /// One message per violated constraint; empty when the instance is valid.
    std::vector<std::string> violations() const;
};

/// Reads `k s` on the first line and the 3k integers after it.
ThreePartitionInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const ThreePartitionInstance& inst);

struct EncodedInstance {
    GraphSpec spec;  // CSR(3k, s)
    Vertex vertex;   // (a_1, ..., a_3k)
};

/// Throws InvalidArgument listing every violation.
EncodedInstance encode(const ThreePartitionInstance& inst);

/// True iff the distance from the origin to the encoded vertex is 2k.
bool decode(const ThreePartitionInstance& inst, int distance);

/// Independent solver: splits [3k] into k triples each summing to s, or nullopt.
std::optional<std::vector<std::vector<int>>> solve_three_partition(const ThreePartitionInstance& inst);

/// Random valid instance. With `planted` the values are built from k triples
/// summing to s, so the answer is yes; otherwise values are drawn freely and
/// the answer is whatever the solver says. Returns nullopt when (k,s) admits
/// no valid instance.
std::optional<ThreePartitionInstance> random_instance(int k, int s, bool planted, std::mt19937_64& rng);

}  // namespace rooklab

#endif
