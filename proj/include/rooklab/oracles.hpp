#ifndef ROOKLAB_ORACLES_HPP
#define ROOKLAB_ORACLES_HPP

// Brute-force ground truth. Nothing in here uses a closed form or a
// construction from the rest of the library; the search only sees adjacency.

#include <cstddef>
#include <string>
#include <vector>

#include "rooklab/graph.hpp"

namespace rooklab {

struct OracleResult {
    std::size_t value = 0;
    std::vector<Vertex> witness;  // canonical order
};

/// Exact independence number (maximum clique of the complement).
OracleResult oracle_alpha(const Graph& g, const Limits& limits = {});
OracleResult oracle_alpha(const GraphSpec& spec, const Limits& limits = {});

/// Exact domination number by iterative deepening over candidate dominators.
OracleResult oracle_gamma(const Graph& g, const Limits& limits = {});
OracleResult oracle_gamma(const GraphSpec& spec, const Limits& limits = {});

/// Exact clique number, branch and bound with greedy-coloring bounds.
OracleResult oracle_omega(const Graph& g, const Limits& limits = {});
OracleResult oracle_omega(const GraphSpec& spec, const Limits& limits = {});

struct ColoringResult {
    std::size_t chromatic = 0;
    std::vector<int> colors;  // indexed like Graph::vertices(), values in [0, chromatic)
};

/// Exact chromatic number: smallest k for which DSATUR backtracking finds a k-coloring.
ColoringResult oracle_chi(const Graph& g, const Limits& limits = {});
ColoringResult oracle_chi(const GraphSpec& spec, const Limits& limits = {});

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> oracle_distances(const Graph& g, std::size_t source);
std::vector<int> oracle_distances(const GraphSpec& spec, const Vertex& source, const Limits& limits = {});

/// Largest finite BFS distance over all sources; 0 for a single vertex.
int oracle_diameter(const Graph& g);

bool is_independent(const GraphSpec& spec, const std::vector<Vertex>& set);
bool is_clique(const GraphSpec& spec, const std::vector<Vertex>& set);
bool is_dominating(const Graph& g, const std::vector<Vertex>& set);

struct CycleVerdict {
    bool valid = false;
    std::string reason;  // empty when valid
};

/// Hamiltonicity check. For SR it also requires the edge (n,0..0)(n-1,1,0..0)
/// to appear between consecutive entries (cyclically).
CycleVerdict verify_cycle(const GraphSpec& spec, const std::vector<Vertex>& cycle, const Limits& limits = {});

}  // namespace rooklab

#endif
