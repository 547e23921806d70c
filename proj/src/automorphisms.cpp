#include "rooklab/automorphisms.hpp"

#include <algorithm>
#include <numeric>

namespace rooklab {

void AutDescriptor::validate() const {
    const std::size_t m = sigma.size();
    if (n < 1) throw InvalidArgument("descriptor: modulus must be positive");
    if (m == 0 || d.size() != m) throw InvalidArgument("descriptor: sigma and d must both have m entries");
    std::vector<char> seen(m, 0);
    for (int s : sigma) {
        if (s < 0 || static_cast<std::size_t>(s) >= m || seen[static_cast<std::size_t>(s)])
            throw InvalidArgument("descriptor: sigma " + sigma_string() + " is not a permutation");
        seen[static_cast<std::size_t>(s)] = 1;
    }
    if (c < 0 || c >= n || std::gcd(c, n) != 1)
        throw InvalidArgument("descriptor: c = " + std::to_string(c) + " is not a unit mod " + std::to_string(n));
    long long sum = 0;
    for (int x : d) {
        if (x < 0 || x >= n) throw InvalidArgument("descriptor: offsets must be residues mod " + std::to_string(n));
        sum += x;
    }
    if (sum % n != 0) throw InvalidArgument("descriptor: offsets must sum to 0 mod " + std::to_string(n));
}

std::string AutDescriptor::sigma_string() const {
    std::string s;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(sigma[i] + 1);
    }
    return s;
}

AutDescriptor identity_descriptor(int m, int n) {
    AutDescriptor id;
    id.n = n;
    id.sigma.resize(static_cast<std::size_t>(m));
    std::iota(id.sigma.begin(), id.sigma.end(), 0);
    id.c = 1 % n;
    id.d.assign(static_cast<std::size_t>(m), 0);
    return id;
}

Vertex apply(const AutDescriptor& desc, const Vertex& x) {
    desc.validate();
    const GraphSpec spec{Family::CSR, static_cast<int>(desc.sigma.size()), desc.n};
    require_vertex(spec, x);
    Vertex y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = static_cast<int>((static_cast<long long>(desc.c) * x[static_cast<std::size_t>(desc.sigma[i])] + desc.d[i]) %
                                desc.n);
    return y;
}

bool within_aut_hypothesis(int m, int n) { return m > 3 && n > 3; }

int euler_phi(int n) {
    if (n < 1) throw InvalidArgument("euler_phi: n must be positive");
    int count = 0;
    for (int c = 0; c < n; ++c)
        if (std::gcd(c, n) == 1) ++count;
    return count;
}

BigInt group_order_formula(int m, int n) {
    csr(m, n);
    BigInt order = 1;
    for (int i = 2; i <= m; ++i) order *= i;
    order *= euler_phi(n);
    order *= boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m - 1));
    return order;
}

DescriptorEnumerator::DescriptorEnumerator(int m, int n) : m_(m), n_(n) {
    csr(m, n);
    sigma_.resize(static_cast<std::size_t>(m));
    std::iota(sigma_.begin(), sigma_.end(), 0);
    for (int c = 0; c < n; ++c)
        if (std::gcd(c, n) == 1) units_.push_back(c);
    prefix_.assign(static_cast<std::size_t>(m - 1), 0);
}

std::optional<AutDescriptor> DescriptorEnumerator::next() {
    if (done_) return std::nullopt;
    AutDescriptor out;
    out.n = n_;
    out.sigma = sigma_;
    out.c = units_[unit_];
    out.d = prefix_;
    long long sum = 0;
    for (int x : prefix_) sum += x;
    out.d.push_back(static_cast<int>((n_ - sum % n_) % n_));

    int k = m_ - 2;
    while (k >= 0 && prefix_[static_cast<std::size_t>(k)] == n_ - 1) prefix_[static_cast<std::size_t>(k--)] = 0;
    if (k >= 0) {
        ++prefix_[static_cast<std::size_t>(k)];
    } else if (++unit_ == units_.size()) {
        unit_ = 0;
        done_ = !std::next_permutation(sigma_.begin(), sigma_.end());
    }
    return out;
}

namespace {

class AutomorphismCounter {
public:
    explicit AutomorphismCounter(const Graph& g) : g_(g), size_(g.size()) {
        common_.assign(size_ * size_, 0);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = i; j < size_; ++j) {
                const auto c = static_cast<std::uint32_t>(g.row(i).count_and(g.row(j)));
                common_[i * size_ + j] = common_[j * size_ + i] = c;
            }
        // Refinement signature: degree plus the sorted common-neighbour counts
        // with each neighbour.
        signature_.resize(size_);
        for (std::size_t v = 0; v < size_; ++v) {
            auto& sig = signature_[v];
            sig.push_back(static_cast<std::uint32_t>(g.neighbors(v).size()));
            std::vector<std::uint32_t> cn;
            for (auto w : g.neighbors(v)) cn.push_back(common_[v * size_ + w]);
            std::sort(cn.begin(), cn.end());
            sig.insert(sig.end(), cn.begin(), cn.end());
        }
        // BFS order so every vertex after a component root has a mapped neighbour.
        std::vector<char> queued(size_, 0);
        parent_.assign(size_, -1);
        for (std::size_t root = 0; root < size_; ++root) {
            if (queued[root]) continue;
            queued[root] = 1;
            std::size_t head = order_.size();
            order_.push_back(root);
            while (head < order_.size()) {
                const std::size_t v = order_[head++];
                for (auto w : g.neighbors(v))
                    if (!queued[w]) {
                        queued[w] = 1;
                        parent_[w] = static_cast<long>(v);
                        order_.push_back(w);
                    }
            }
        }
        image_.assign(size_, -1);
        used_.assign(size_, 0);
    }

    std::uint64_t count() {
        count_ = 0;
        extend(0);
        return count_;
    }

private:
    bool consistent(std::size_t pos, std::size_t v, std::size_t x) const {
        if (signature_[v] != signature_[x]) return false;
        for (std::size_t k = 0; k < pos; ++k) {
            const std::size_t w = order_[k];
            const auto xw = static_cast<std::size_t>(image_[w]);
            if (g_.adjacent(v, w) != g_.adjacent(x, xw)) return false;
            if (common_[v * size_ + w] != common_[x * size_ + xw]) return false;
        }
        return true;
    }

    void try_image(std::size_t pos, std::size_t v, std::size_t x) {
        if (used_[x] || !consistent(pos, v, x)) return;
        image_[v] = static_cast<long>(x);
        used_[x] = 1;
        extend(pos + 1);
        used_[x] = 0;
        image_[v] = -1;
    }

    void extend(std::size_t pos) {
        if (pos == size_) {
            ++count_;
            return;
        }
        const std::size_t v = order_[pos];
        if (parent_[v] >= 0) {
            const auto px = static_cast<std::size_t>(image_[static_cast<std::size_t>(parent_[v])]);
            for (auto x : g_.neighbors(px)) try_image(pos, v, x);
        } else {
            for (std::size_t x = 0; x < size_; ++x) try_image(pos, v, x);
        }
    }

    const Graph& g_;
    std::size_t size_;
    std::vector<std::uint32_t> common_;
    std::vector<std::vector<std::uint32_t>> signature_;
    std::vector<std::size_t> order_;
    std::vector<long> parent_;
    std::vector<long> image_;
    std::vector<char> used_;
    std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t oracle_aut_count(const GraphSpec& spec, const Limits& limits) {
    if (vertex_count(spec) > limits.aut_cap)
        throw CapExceeded("automorphism search on " + spec.name() + " exceeds the cap of " +
                          std::to_string(limits.aut_cap) + " vertices");
    const Graph g(spec, limits);
    return AutomorphismCounter(g).count();
}

}  // namespace rooklab
