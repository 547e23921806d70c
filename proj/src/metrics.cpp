#include "rooklab/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "rooklab/constructions.hpp"
#include "rooklab/oracles.hpp"

namespace rooklab {

bool ZeroPartition::validates(const Vertex& b, int n) const {
    const std::size_t m = b.size();
    std::vector<char> seen(m, 0);
    for (const auto& block : blocks) {
        if (block.empty()) return false;
        long long sum = 0;
        for (int idx : block) {
            if (idx < 1 || static_cast<std::size_t>(idx) > m || seen[static_cast<std::size_t>(idx - 1)]) return false;
            seen[static_cast<std::size_t>(idx - 1)] = 1;
            sum += b[static_cast<std::size_t>(idx - 1)];
        }
        if (sum % n != 0) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

TauResult tau(const Vertex& b, int n, const Limits& limits) {
    if (n < 1) throw InvalidArgument("tau: modulus must be positive");
    const int m = static_cast<int>(b.size());
    if (m < 1) throw InvalidArgument("tau: empty vertex");
    require_vertex(GraphSpec{Family::CSR, m, n}, b);
    if (m > limits.mask_limit || m > 30)
        throw CapExceeded("tau: m = " + std::to_string(m) + " exceeds the mask limit of " +
                          std::to_string(limits.mask_limit));

    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<int> residue(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const int low = std::countr_zero(mask);
        residue[mask] = (residue[mask & (mask - 1)] + b[static_cast<std::size_t>(low)]) % n;
    }

    // best[M] = max blocks for a zero-sum mask M (-1 otherwise); first[M] is
    // the block holding M's lowest index in the lowest-numbered optimal split.
    std::vector<std::int8_t> best(std::size_t{full} + 1, -1);
    std::vector<std::uint32_t> first(std::size_t{full} + 1, 0);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (residue[mask] != 0) continue;
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        std::uint32_t sub = 0;
        while (true) {
            const std::uint32_t block = sub | low;
            if (residue[block] == 0) {
                const int cand = 1 + best[mask ^ block];
                if (cand > best[mask]) {
                    best[mask] = static_cast<std::int8_t>(cand);
                    first[mask] = block;
                }
            }
            if (sub == rest) break;
            sub = (sub - rest) & rest;
        }
    }

    TauResult out;
    out.tau = best[full];
    for (std::uint32_t mask = full; mask;) {
        const std::uint32_t block = first[mask];
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (block >> i & 1u) idx.push_back(i + 1);
        out.witness.blocks.push_back(std::move(idx));
        mask ^= block;
    }
    return out;
}

Vertex csr_difference(const Vertex& u, const Vertex& v, int n) {
    Vertex d(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) d[i] = ((v[i] - u[i]) % n + n) % n;
    return d;
}

DistanceResult csr_distance(const GraphSpec& spec, const Vertex& u, const Vertex& v, const Limits& limits) {
    if (spec.family != Family::CSR) throw InvalidArgument("csr_distance needs a CSR graph, got " + spec.name());
    require_vertex(spec, u);
    require_vertex(spec, v);
    auto t = tau(csr_difference(u, v, spec.n), spec.n, limits);
    return {spec.m - t.tau, std::move(t.witness)};
}

DiameterResult csr_diameter(int m, int n) {
    csr(m, n);
    DiameterResult out;
    out.diameter = m - (m - 1) / n - 1;
    out.witness.assign(static_cast<std::size_t>(m), 1 % n);
    out.witness[0] = (((n - (m - 1)) % n) + n) % n;
    return out;
}

int sr_diameter(int m, int n) {
    sr(m, n);
    return std::min(m - 1, n);
}

std::string_view side_name(BoundSide s) {
    switch (s) {
        case BoundSide::Lower: return "lower";
        case BoundSide::Upper: return "upper";
        case BoundSide::Exact: return "exact";
    }
    return "?";
}

std::int64_t sr_lambda_min_formula(int m, int n) {
    return std::max<std::int64_t>(-n, -static_cast<std::int64_t>(m) * (m - 1) / 2);
}

namespace {

BigInt floor_of(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

BigInt ceil_of(const Rational& r) {
    BigInt f = floor_of(r);
    return Rational(f) == r ? f : f + 1;
}

void add(BoundsReport& rep, std::string quantity, BoundSide side, Rational value, std::string tag, std::string anchor) {
    BoundRecord rec;
    rec.quantity = std::move(quantity);
    rec.side = side;
    rec.rounded = side == BoundSide::Lower ? ceil_of(value) : floor_of(value);
    rec.value = std::move(value);
    rec.formula_tag = std::move(tag);
    rec.anchor = std::move(anchor);
    rep.records.push_back(std::move(rec));
}

}  // namespace

std::vector<const BoundRecord*> BoundsReport::find(std::string_view quantity) const {
    std::vector<const BoundRecord*> out;
    for (const auto& r : records)
        if (r.quantity == quantity) out.push_back(&r);
    return out;
}

std::optional<BigInt> BoundsReport::tightest(std::string_view quantity, BoundSide side) const {
    std::optional<BigInt> best;
    for (const auto* r : find(quantity)) {
        if (r->side != side) continue;
        if (!best || (side == BoundSide::Lower && r->rounded > *best) || (side == BoundSide::Upper && r->rounded < *best))
            best = r->rounded;
    }
    return best;
}

std::vector<std::string> BoundsReport::inconsistencies() const {
    std::vector<std::string> out;
    std::vector<std::string> quantities;
    for (const auto& r : records)
        if (std::find(quantities.begin(), quantities.end(), r.quantity) == quantities.end())
            quantities.push_back(r.quantity);
    for (const auto& q : quantities) {
        auto lo = tightest(q, BoundSide::Lower);
        auto hi = tightest(q, BoundSide::Upper);
        auto ex = tightest(q, BoundSide::Exact);
        if ((lo && hi && *lo > *hi) || (lo && ex && *lo > *ex) || (hi && ex && *ex > *hi)) out.push_back(q);
    }
    return out;
}

BoundsReport bounds_report(const GraphSpec& spec) {
    spec.validate();
    BoundsReport rep;
    rep.spec = spec;
    rep.p = default_residue_prime(spec);
    const std::int64_t m = spec.m, n = spec.n;
    const BigInt vertices = vertex_count(spec);
    const std::int64_t r = regular_degree(spec);

    if (spec.family == Family::SR) {
        add(rep, "alpha", BoundSide::Lower, Rational(vertices, rep.p), "residue-classes", "C(n+m-1,n)/p <= alpha");
        const std::int64_t lambda = sr_lambda_min_formula(spec.m, spec.n);
        if (lambda < 0) {  // otherwise edgeless, and Hoffman says nothing
            add(rep, "alpha", BoundSide::Upper, Rational(vertices, m), "hoffman-simplified", "alpha <= C(n+m-1,n)/m");
            add(rep, "alpha", BoundSide::Upper, Rational(-lambda) / Rational(r - lambda) * Rational(vertices), "hoffman",
                "alpha <= -lambda_min/(r-lambda_min) |V|");
            add(rep, "chi", BoundSide::Lower, Rational(r - lambda, -lambda), "hoffman-chromatic",
                "chi >= (r-lambda_min)/(-lambda_min)");
        }
        add(rep, "chi", BoundSide::Upper, Rational(rep.p), "residue-coloring", "chi <= p");
        add(rep, "gamma", BoundSide::Lower, Rational(vertices, r + 1), "degree-bound", "gamma >= |V|/(Delta+1)");
        if (m >= 3) {
            BigInt d = 0;
            for (std::int64_t i = 0; i <= n / 2; ++i) d += binomial(n + m - 3 - 2 * i, m - 3);
            add(rep, "gamma", BoundSide::Upper, Rational(d), "dominating-set-D",
                "|D| = sum_i C(n+m-3-2i, m-3)");
            add(rep, "gamma", BoundSide::Upper, Rational(binomial(n + m - 1, m - 2), 2), "dominating-set-bound",
                "|D| <= C(n+m-1,m-2)/2");
        }
        add(rep, "diameter", BoundSide::Exact, Rational(sr_diameter(spec.m, spec.n)), "sr-diameter",
            "diam = min{m-1, n}");
        add(rep, "lambda_min", BoundSide::Exact, Rational(lambda), "lambda-min", "lambda_min = max{-n, -C(m,2)}");
    } else {
        add(rep, "chi", BoundSide::Lower, Rational(m), "hoffman-via-sr", "m <= chi(CSR)");
        add(rep, "chi", BoundSide::Upper, Rational(rep.p), "residue-coloring", "chi(CSR) <= p");
        const BigInt stated = binomial(n + m - 1, n);
        add(rep, "alpha", BoundSide::Lower, Rational(stated, rep.p), "stated-csr-alpha", "C(n+m-1,n)/p <= alpha(CSR)");
        add(rep, "alpha", BoundSide::Upper, Rational(stated, m), "stated-csr-alpha", "alpha(CSR) <= C(n+m-1,n)/m");
        if (m != 1 && n != 1)
            add(rep, "omega", BoundSide::Exact, Rational(std::max(m, n)), "clique-formula", "omega = max{n,m}");
        add(rep, "gamma", BoundSide::Lower, Rational(vertices, r + 1), "degree-bound", "gamma >= |V|/(Delta+1)");
        add(rep, "diameter", BoundSide::Exact, Rational(csr_diameter(spec.m, spec.n).diameter), "csr-diameter",
            "diam = m - floor((m-1)/n) - 1");
    }
    return rep;
}

std::vector<GammaRow> gamma_order_check(int m, int n_lo, int n_hi, const Limits& limits) {
    if (m < 3) throw InvalidArgument("gamma_order_check needs m >= 3");
    std::vector<GammaRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        const GraphSpec spec = sr(m, n);
        GammaRow row;
        row.n = n;
        row.vertices = vertex_count(spec);
        row.lower = ceil_of(Rational(row.vertices, regular_degree(spec) + 1));
        const Graph g(spec, limits);
        row.gamma = oracle_gamma(g, limits).value;
        const SrDominatingSet d(m, n, limits);
        row.construction = d.members().size();
        row.upper_closed_form = d.twice_upper_bound() / 2;
        row.sandwiched = row.lower <= row.gamma && BigInt(row.gamma) <= row.construction &&
                         row.construction * 2 <= d.twice_upper_bound();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace rooklab
