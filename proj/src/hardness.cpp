#include "rooklab/hardness.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>

namespace rooklab {

std::vector<std::string> ThreePartitionInstance::violations() const {
    std::vector<std::string> out;
    if (k < 1) out.push_back("k must be positive");
    if (s < 1) out.push_back("s must be positive");
    if (static_cast<long long>(a.size()) != 3LL * k)
        out.push_back("expected " + std::to_string(3LL * k) + " values, got " + std::to_string(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(4LL * a[i] > s && 2LL * a[i] < s))
            out.push_back("range violation at index " + std::to_string(i + 1) + " (" + std::to_string(a[i]) +
                          " not strictly between s/4 and s/2)");
    const long long sum = std::accumulate(a.begin(), a.end(), 0LL);
    if (sum != 1LL * k * s)
        out.push_back("sum mismatch: values sum to " + std::to_string(sum) + ", expected k*s = " +
                      std::to_string(1LL * k * s));
    return out;
}

ThreePartitionInstance read_instance(std::istream& in) {
    ThreePartitionInstance inst;
    if (!(in >> inst.k >> inst.s)) throw InvalidArgument("3-partition instance: expected 'k s' on the first line");
    if (inst.k < 1 || inst.k > 1'000'000) throw InvalidArgument("3-partition instance: k out of range");
    for (int i = 0; i < 3 * inst.k; ++i) {
        int x = 0;
        if (!(in >> x)) throw InvalidArgument("3-partition instance: expected " + std::to_string(3 * inst.k) + " values");
        inst.a.push_back(x);
    }
    int extra = 0;
    if (in >> extra) throw InvalidArgument("3-partition instance: trailing values after " + std::to_string(3 * inst.k));
    return inst;
}

void write_instance(std::ostream& out, const ThreePartitionInstance& inst) {
    out << inst.k << ' ' << inst.s << '\n';
    for (std::size_t i = 0; i < inst.a.size(); ++i) out << (i ? " " : "") << inst.a[i];
    out << '\n';
}

EncodedInstance encode(const ThreePartitionInstance& inst) {
    const auto problems = inst.violations();
    if (!problems.empty()) {
        std::string msg = "invalid 3-partition instance:";
        for (const auto& p : problems) msg += " " + p + ";";
        msg.pop_back();
        throw InvalidArgument(msg);
    }
    EncodedInstance enc{csr(3 * inst.k, inst.s), inst.a};
    require_vertex(enc.spec, enc.vertex);
    return enc;
}

bool decode(const ThreePartitionInstance& inst, int distance) { return distance == 2 * inst.k; }

namespace {

bool split_triples(const std::vector<int>& a, int s, std::vector<char>& used, std::vector<std::vector<int>>& out) {
    const auto first = std::find(used.begin(), used.end(), 0);
    if (first == used.end()) return true;
    const auto i = static_cast<std::size_t>(first - used.begin());
    used[i] = 1;
    for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        for (std::size_t l = j + 1; l < a.size(); ++l) {
            if (used[l] || a[i] + a[j] + a[l] != s) continue;
            used[l] = 1;
            out.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(l + 1)});
            if (split_triples(a, s, used, out)) return true;
            out.pop_back();
            used[l] = 0;
        }
        used[j] = 0;
    }
    used[i] = 0;
    return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> solve_three_partition(const ThreePartitionInstance& inst) {
    if (!inst.violations().empty()) throw InvalidArgument("solve_three_partition: invalid instance");
    std::vector<char> used(inst.a.size(), 0);
    std::vector<std::vector<int>> triples;
    if (split_triples(inst.a, inst.s, used, triples)) return triples;
    return std::nullopt;
}

std::optional<ThreePartitionInstance> random_instance(int k, int s, bool planted, std::mt19937_64& rng) {
    const int lo = s / 4 + 1;                  // smallest a with 4a > s
    const int hi = (s % 2 == 0) ? s / 2 - 1 : s / 2;  // largest a with 2a < s
    if (k < 1 || lo > hi || 3 * lo > s || 3 * hi < s) return std::nullopt;
    std::uniform_int_distribution<int> pick(lo, hi);
    ThreePartitionInstance inst{k, s, {}};
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        inst.a.clear();
        if (planted) {
            for (int t = 0; t < k; ++t) {
                int x = 0, y = 0, z = 0;
                do {
                    x = pick(rng);
                    y = pick(rng);
                    z = s - x - y;
                } while (z < lo || z > hi);
                inst.a.insert(inst.a.end(), {x, y, z});
            }
            std::shuffle(inst.a.begin(), inst.a.end(), rng);
        } else {
            for (int t = 0; t < 3 * k - 1; ++t) inst.a.push_back(pick(rng));
            inst.a.push_back(k * s - std::accumulate(inst.a.begin(), inst.a.end(), 0));
        }
        if (inst.violations().empty()) return inst;
    }
    return std::nullopt;
}

}  // namespace rooklab
