#ifndef ROOKLAB_SPECTRAL_HPP
#define ROOKLAB_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "rooklab/graph.hpp"

namespace rooklab {

struct Eigenvalue {
    double value = 0.0;
    std::size_t multiplicity = 0;
};

struct Spectrum {
    std::vector<double> values;           // descending, with repetition
    std::vector<Eigenvalue> distinct;     // merged at 1e-8, descending
    bool integral = false;                // every value within tol of an integer
    double max_integer_deviation = 0.0;
    double max_imaginary = 0.0;           // character method only

    double min() const { return values.empty() ? 0.0 : values.back(); }
    double max() const { return values.empty() ? 0.0 : values.front(); }
};

/// Dense symmetric eigendecomposition of the adjacency matrix in canonical order.
/// Throws CapExceeded above limits.eig_cap vertices.
Spectrum spectrum(const GraphSpec& spec, const Limits& limits = {});
Spectrum spectrum(const Graph& g, const Limits& limits = {});

/// Spectrum of an arbitrary symmetric 0/1 adjacency given as rows.
Spectrum spectrum_of_rows(const std::vector<Bitset>& rows, const Limits& limits = {});

/// CSR(m,n) as a Cayley graph on the zero-sum subgroup of Z_n^m: one
/// eigenvalue per character, sum over the connection set of exp(2 pi i y.s/n).
Spectrum csr_character_spectrum(int m, int n, const Limits& limits = {});

struct LambdaMinCheck {
    double computed = 0.0;
    std::int64_t formula = 0;
    bool matches = false;
};

/// Compares the smallest adjacency eigenvalue of SR(m,n) with max{-n, -C(m,2)}.
LambdaMinCheck lambda_min_check(const GraphSpec& spec, const Limits& limits = {});

/// floor(-lambda_min / (r - lambda_min) * |V|); |V| when lambda_min >= 0.
std::size_t hoffman_alpha_bound(const Spectrum& s, double degree, std::size_t vertices, double tol = 1e-6);

/// True when both sorted value lists agree entrywise within tol.
bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol = 1e-6);

}  // namespace rooklab

#endif
