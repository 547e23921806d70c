#include <doctest.h>

#include <random>
#include <sstream>

#include "reference.hpp"
#include "rooklab/hardness.hpp"
#include "rooklab/metrics.hpp"

using namespace rooklab;

TEST_CASE("instance validation") {
    ThreePartitionInstance ok{2, 20, {6, 7, 7, 6, 7, 7}};
    CHECK(ok.violations().empty());
    ThreePartitionInstance range{1, 12, {3, 4, 5}};  // 3 is not above s/4
    CHECK_FALSE(range.violations().empty());
    ThreePartitionInstance sum{2, 20, {6, 7, 7, 6, 7, 8}};
    CHECK_FALSE(sum.violations().empty());
    CHECK_THROWS_AS(encode(range), InvalidArgument);
}

TEST_CASE("instance file round trip") {
    ThreePartitionInstance inst{2, 20, {6, 7, 7, 6, 7, 7}};
    std::stringstream ss;
    write_instance(ss, inst);
    auto back = read_instance(ss);
    CHECK(back.k == 2);
    CHECK(back.s == 20);
    CHECK(back.a == inst.a);
    std::stringstream short_file("2 20\n6 7 7\n");
    CHECK_THROWS_AS(read_instance(short_file), InvalidArgument);
}

TEST_CASE("encode") {
    auto e = encode({2, 20, {6, 7, 7, 6, 7, 7}});
    CHECK(e.spec == csr(6, 20));
    CHECK(e.vertex == Vertex{6, 7, 7, 6, 7, 7});
    CHECK(decode({2, 20, {6, 7, 7, 6, 7, 7}}, 4));
    CHECK_FALSE(decode({2, 20, {6, 7, 7, 6, 7, 7}}, 5));
}

TEST_CASE("reduction agrees with brute force on generated instances") {
    std::mt19937_64 rng(31337);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int k = std::uniform_int_distribution<int>(1, 3)(rng);
        const int s = std::uniform_int_distribution<int>(7, 20)(rng);
        auto inst = random_instance(k, s, trial % 2 == 0, rng);
        if (!inst) continue;
        REQUIRE(inst->violations().empty());
        const auto enc = encode(*inst);
        const auto d = csr_distance(enc.spec, Vertex(enc.vertex.size(), 0), enc.vertex);
        const bool expected = ref::three_partition_brute(inst->a, inst->s);
        CHECK(decode(*inst, d.distance) == expected);
        CHECK(solve_three_partition(*inst).has_value() == expected);
        for (const auto& block : d.witness.blocks) CHECK(block.size() >= 3);
        (expected ? yes : no)++;
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("solver triples are a partition") {
    ThreePartitionInstance inst{3, 20, {6, 7, 7, 6, 6, 8, 8, 6, 6}};
    REQUIRE(inst.violations().empty());
    auto t = solve_three_partition(inst);
    REQUIRE(t.has_value());
    std::vector<int> seen(9, 0);
    for (const auto& tr : *t) {
        CHECK(tr.size() == 3);
        int sum = 0;
        for (int i : tr) {
            ++seen[i - 1];
            sum += inst.a[i - 1];
        }
        CHECK(sum == 20);
    }
    for (int c : seen) CHECK(c == 1);
}
