#include "doctest.h"

#include <algorithm>

#include "howe/errors.hpp"
#include "howe/partition.hpp"

using namespace howe;

TEST_CASE("partition construction rejects bad input") {
    CHECK_THROWS_AS(Partition({1, 2}), ValidationError);
    CHECK_THROWS_AS(Partition({2, 0}), ValidationError);
    CHECK_THROWS_AS(Partition({-1}), ValidationError);
    const Partition p{3, 1, 1};
    CHECK(p.norm() == 5);
    CHECK(p.length() == 3);
    CHECK(p[5] == 0);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.to_string() == "(3,1,1)");
    CHECK(Partition{}.to_string() == "()");
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(1) == std::vector<Partition>{Partition{1}});
    const auto five = partitions_of(5);
    REQUIRE(five.size() == 7);
    CHECK(five.front() == Partition{5});
    CHECK(five.back() == Partition{1, 1, 1, 1, 1});
    CHECK(std::is_sorted(five.rbegin(), five.rend()));
    for (int n = 0; n <= 12; ++n) CHECK(static_cast<long long>(partitions_of(n).size()) == partition_count(n));
    CHECK(partition_count(30) == 5604);
}

TEST_CASE("bipartitions_of") {
    CHECK(bipartitions_of(0).size() == 1);
    const auto one = bipartitions_of(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == Bipartition{{1}, {}});
    CHECK(one[1] == Bipartition{{}, {1}});
    CHECK(bipartitions_of(2).size() == 5);
    CHECK(bipartitions_of(4).size() == 20);
    const auto two = bipartitions_of(2);
    CHECK(std::is_sorted(two.begin(), two.end(), CanonicalLess{}));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
    for (const auto& p : partitions_of(8)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("strip additions") {
    using V = std::vector<Partition>;
    CHECK(horizontal_strip_additions(Partition{}, 2) == V{{2}});
    CHECK(horizontal_strip_additions(Partition{1}, 1) == V{{2}, {1, 1}});
    CHECK(horizontal_strip_additions(Partition{2, 1}, 2) == V{{4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}});
    CHECK(vertical_strip_additions(Partition{}, 2) == V{{1, 1}});
    CHECK(vertical_strip_additions(Partition{1}, 1) == V{{2}, {1, 1}});
    CHECK(vertical_strip_additions(Partition{2}, 2) == V{{3, 1}, {2, 1, 1}});
    CHECK(horizontal_strip_additions(Partition{3}, 0) == V{{3}});
}

TEST_CASE("strip additions against brute force") {
    // lambda/p is a horizontal strip iff p_i >= lambda_{i+1} for every i
    for (int n = 0; n <= 5; ++n)
        for (const auto& p : partitions_of(n))
            for (int s = 0; s <= 3; ++s) {
                std::vector<Partition> expected;
                for (const auto& lambda : partitions_of(n + s)) {
                    if (!contains(lambda, p)) continue;
                    bool strip = true;
                    for (std::size_t i = 0; i < lambda.length(); ++i)
                        if (p[i] < lambda[i + 1]) strip = false;
                    if (strip) expected.push_back(lambda);
                }
                CHECK(horizontal_strip_additions(p, s) == expected);
            }
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition{1, 1, 1, 1}, Partition{4}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_THROWS_AS(dominance_leq(Partition{3}, Partition{2}), ValidationError);
    // reverses under conjugation
    for (const auto& a : partitions_of(6))
        for (const auto& b : partitions_of(6))
            CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
}
