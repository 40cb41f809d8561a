#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "howe/bn_characters.hpp"
#include "howe/errors.hpp"
#include "howe/howe_unipotent.hpp"
#include "howe/oracle.hpp"

using namespace howe;

namespace {

BnClassLabel cls(Partition pos, Partition neg) { return {std::move(pos), std::move(neg)}; }

std::int64_t total(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

TEST_CASE("conjugacy classes") {
    const auto& one = conjugacy_classes(1);
    REQUIRE(one.size() == 2);
    CHECK(one.sizes[one.index_of(cls({1}, {}))] == 1);
    CHECK(one.sizes[one.index_of(cls({}, {1}))] == 1);
    const auto& two = conjugacy_classes(2);
    CHECK(two.size() == 5);
    CHECK(total(two.sizes) == 8);
    CHECK(total(conjugacy_classes(5).sizes) == 3840);
    CHECK(conjugacy_classes(0).size() == 1);
    CHECK(hyperoctahedral_order(6) == 46080);
}

TEST_CASE("serial and parallel enumeration agree") {
    for (int n = 0; n <= 6; ++n) CHECK(enumerate_class_sizes_serial(n) == enumerate_class_sizes_parallel(n));
}

TEST_CASE("class sizes match the centralizer formula") {
    for (int n = 0; n <= 6; ++n) {
        const auto& c = conjugacy_classes(n);
        for (std::size_t i = 0; i < c.size(); ++i)
            CHECK(c.sizes[i] * centralizer_order(c.labels[i]) == c.group_order);
    }
}

TEST_CASE("rank above the oracle bound is rejected") {
    CHECK_THROWS_AS(conjugacy_classes(oracle_rank_bound() + 1), ValidationError);
}

TEST_CASE("Murnaghan-Nakayama") {
    for (const auto& mu : partitions_of(4)) CHECK(sn_character_value(Partition{4}, mu) == 1);
    CHECK(sn_character_value(Partition{1, 1, 1}, Partition{3}) == 1);
    CHECK(sn_character_value(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(sn_character_value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(sn_character_value(Partition{2, 1}, Partition{3}) == -1);
    CHECK(sn_character_value(Partition{3, 2}, Partition{1, 1, 1, 1, 1}) == 5);
    CHECK(sn_character_value(Partition{3, 3}, Partition{2, 2, 2}) == -3);
    CHECK_THROWS_AS(sn_character_value(Partition{2}, Partition{1}), ValidationError);
}

TEST_CASE("character table of W_0, W_1 and W_2") {
    const auto& t0 = character_table(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0.value(0, 0) == 1);

    const auto& t1 = character_table(1);
    const Bipartition triv{{1}, {}}, sgn{{}, {1}};
    CHECK(t1.character(triv).at(cls({1}, {})) == Rational(1));
    CHECK(t1.character(triv).at(cls({}, {1})) == Rational(1));
    CHECK(t1.character(sgn).at(cls({1}, {})) == Rational(1));
    CHECK(t1.character(sgn).at(cls({}, {1})) == Rational(-1));

    const auto& t2 = character_table(2);
    std::vector<std::int64_t> degrees;
    for (const auto& l : t2.labels()) degrees.push_back(t2.degree(l));
    CHECK(degrees == std::vector<std::int64_t>{1, 1, 2, 1, 1});
}

TEST_CASE("degrees square-sum to the group order") {
    for (int n = 0; n <= 6; ++n) {
        const auto& t = character_table(n);
        std::int64_t s = 0;
        for (const auto& l : t.labels()) s += t.degree(l) * t.degree(l);
        CHECK(s == hyperoctahedral_order(n));
    }
}

TEST_CASE("linear characters") {
    CHECK(linear_character_value(LinearCharacter::coxeter_sign, cls({}, {1})) == -1);
    CHECK(linear_character_value(LinearCharacter::sign_changes, cls({2}, {})) == 1);
    CHECK(linear_character_value(LinearCharacter::permutation_sign, cls({2}, {})) == -1);
    for (int n = 0; n <= 5; ++n)
        CHECK(linear_character(n, LinearCharacter::coxeter_sign) ==
              linear_character(n, LinearCharacter::sign_changes) * linear_character(n, LinearCharacter::permutation_sign));
    CHECK(parse_linear_character("sign_changes") == LinearCharacter::sign_changes);
    CHECK_THROWS_AS(parse_linear_character("sgn"), ValidationError);
}

TEST_CASE("induction") {
    // W_0 x W_1 -> W_1 is the identity
    const auto triv01 = outer_product(linear_character(0, LinearCharacter::trivial), linear_character(1, LinearCharacter::trivial));
    CHECK(induce_class_function(triv01) == linear_character(1, LinearCharacter::trivial));

    const auto triv11 = outer_product(linear_character(1, LinearCharacter::trivial), linear_character(1, LinearCharacter::trivial));
    const auto ind = induce_class_function(triv11);
    CHECK(ind.degree() == Rational(2));
    for (const auto& [label, mult] : decompose(ind)) CHECK((mult == 0 || mult == 1));
}

TEST_CASE("Frobenius reciprocity on random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> value(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + trial % 5;
        const int a = static_cast<int>(rng() % (n + 1));
        const auto& ca = conjugacy_classes(a);
        const auto& cb = conjugacy_classes(n - a);
        std::vector<Rational> vals;
        for (std::size_t i = 0; i < ca.size() * cb.size(); ++i) vals.emplace_back(value(rng), 1 + rng() % 3);
        const ProductClassFunction f(a, n - a, vals);
        const auto& table = character_table(n);
        const auto& chi = table.character(rng() % table.size());
        CHECK(inner_product(induce_class_function(f), chi) == inner_product(f, restrict_class_function(chi, a)));
    }
}

TEST_CASE("decompose") {
    const auto& t2 = character_table(2);
    const Bipartition two{{2}, {}};
    const auto single = decompose(t2.character(two));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == std::pair{two, std::int64_t{1}});

    std::vector<Rational> reg(conjugacy_classes(2).size(), Rational(0));
    reg[conjugacy_classes(2).index_of(cls({1, 1}, {}))] = 8;
    const auto regular = decompose(ClassFunction(2, reg));
    REQUIRE(regular.size() == 5);
    for (const auto& [label, mult] : regular) CHECK(mult == t2.degree(label));

    CHECK(decompose(ClassFunction::zero(3)).empty());
    CHECK_THROWS_AS(decompose(ClassFunction::constant(1, Rational(1, 2))), ValidationError);
}

TEST_CASE("twists") {
    CHECK(twist_label({{2}, {}}, LinearCharacter::sign_changes) == Bipartition{{}, {2}});
    CHECK(twist_label({{2}, {}}, LinearCharacter::coxeter_sign) == Bipartition{{}, {1, 1}});
    CHECK(twist_label({{2, 1}, {1}}, LinearCharacter::trivial) == Bipartition{{2, 1}, {1}});
    for (const auto which : {LinearCharacter::trivial, LinearCharacter::sign_changes, LinearCharacter::permutation_sign,
                             LinearCharacter::coxeter_sign})
        for (int n = 0; n <= 4; ++n)
            for (const auto& [from, to] : tensor_label_map(n, which)) {
                CHECK(twist_label(from, which) == to);
                CHECK(twist_label(to, which) == from);
            }
}

TEST_CASE("Pieri expansion matches explicit induction") {
    for (const auto which : {LinearCharacter::trivial, LinearCharacter::coxeter_sign, LinearCharacter::sign_changes,
                             LinearCharacter::permutation_sign})
        for (int l = 0; l <= 3; ++l)
            for (const auto& chi : bipartitions_of(l))
                for (int extra = 0; extra + l <= 4; ++extra) {
                    std::vector<Bipartition> oracle;
                    for (const auto& [label, mult] : decompose(oracle::induced_character(chi, extra, which))) {
                        CHECK(mult == 1);
                        oracle.push_back(label);
                    }
                    auto pieri = pieri_induce(chi, extra, which);
                    std::sort(pieri.begin(), pieri.end(), CanonicalLess{});
                    CHECK(pieri == oracle);
                }
}
