#include "rooklab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "rooklab/metrics.hpp"

namespace rooklab {

namespace {

constexpr double kMergeTol = 1e-8;

Spectrum finish(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    s.values = std::move(values);
    for (double v : s.values) {
        s.max_integer_deviation = std::max(s.max_integer_deviation, std::abs(v - std::round(v)));
        if (!s.distinct.empty() && std::abs(s.distinct.back().value - v) <= kMergeTol)
            ++s.distinct.back().multiplicity;
        else
            s.distinct.push_back({v, 1});
    }
    s.integral = s.max_integer_deviation <= tol;
    return s;
}

}  // namespace

Spectrum spectrum_of_rows(const std::vector<Bitset>& rows, const Limits& limits) {
    const std::size_t size = rows.size();
    if (size > limits.eig_cap)
        throw CapExceeded("dense eigensolve of " + std::to_string(size) + " vertices exceeds the cap of " +
                          std::to_string(limits.eig_cap));
    if (size == 0) return finish({}, limits.tol);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
    for (std::size_t i = 0; i < size; ++i)
        rows[i].for_each([&](std::size_t j) { a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0; });
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return finish(std::vector<double>(ev.data(), ev.data() + ev.size()), limits.tol);
}

Spectrum spectrum(const Graph& g, const Limits& limits) {
    std::vector<Bitset> rows;
    rows.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) rows.push_back(g.row(i));
    return spectrum_of_rows(rows, limits);
}

Spectrum spectrum(const GraphSpec& spec, const Limits& limits) {
    if (vertex_count(spec) > limits.eig_cap)
        throw CapExceeded(spec.name() + " has " + vertex_count(spec).str() + " vertices, above the eigensolver cap of " +
                          std::to_string(limits.eig_cap));
    return spectrum(Graph(spec, limits), limits);
}

Spectrum csr_character_spectrum(int m, int n, const Limits& limits) {
    const GraphSpec spec = csr(m, n);
    if (vertex_count(spec) > limits.enum_cap)
        throw CapExceeded(spec.name() + " exceeds the enumeration cap of " + std::to_string(limits.enum_cap));

    // Characters of the zero-sum subgroup are x -> w^(y.x) with y taken modulo
    // the all-ones vector; fixing y_m = 0 picks one representative each.
    const double angle = 2.0 * std::numbers::pi / n;
    std::vector<double> values;
    double max_imag = 0.0;
    std::vector<int> y(static_cast<std::size_t>(m), 0);
    while (true) {
        std::complex<double> sum = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int t = 1; t < n; ++t) {
                    const int phase = (t * (y[i] - y[j]) % n + n) % n;
                    sum += std::polar(1.0, angle * phase);
                }
        values.push_back(sum.real());
        max_imag = std::max(max_imag, std::abs(sum.imag()));
        int k = m - 2;
        while (k >= 0 && y[k] == n - 1) y[k--] = 0;
        if (k < 0) break;
        ++y[k];
    }
    Spectrum s = finish(std::move(values), limits.tol);
    s.max_imaginary = max_imag;
    return s;
}

LambdaMinCheck lambda_min_check(const GraphSpec& spec, const Limits& limits) {
    if (spec.family != Family::SR) throw InvalidArgument("lambda_min_check applies to SR graphs, got " + spec.name());
    const Spectrum s = spectrum(spec, limits);
    LambdaMinCheck out;
    out.computed = s.min();
    out.formula = sr_lambda_min_formula(spec.m, spec.n);
    out.matches = std::abs(out.computed - static_cast<double>(out.formula)) <= limits.tol;
    return out;
}

std::size_t hoffman_alpha_bound(const Spectrum& s, double degree, std::size_t vertices, double tol) {
    const double lambda = s.min();
    if (lambda >= -tol) return vertices;
    const double bound = -lambda / (degree - lambda) * static_cast<double>(vertices);
    return static_cast<std::size_t>(std::floor(bound + tol));
}

bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (std::abs(a.values[i] - b.values[i]) > tol) return false;
    return true;
}

}  // namespace rooklab
