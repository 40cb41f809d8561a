#include "doctest.h"

#include "howe/errors.hpp"
#include "howe/howe_unipotent.hpp"
#include "howe/oracle.hpp"

using namespace howe;

namespace {

const Bipartition kTriv1{{1}, {}};
const Bipartition kSgn1{{}, {1}};
const Bipartition kEmpty{};

TowerContext tower(int parity, int witt) { return {3, parity, witt}; }

}  // namespace

TEST_CASE("cuspidal bookkeeping") {
    CHECK(witt_index_of_cuspidal(0) == 0);
    CHECK(witt_index_of_cuspidal(2) == 1);
    CHECK(witt_index_of_cuspidal(3) == 3);
    CHECK(witt_index_of_cuspidal(4) == 5);
    CHECK(default_theta_cuspidal(0, 0) == 0);
    CHECK(default_theta_cuspidal(0, 1) == 1);
    CHECK(default_theta_cuspidal(2, 1) == 1);
    CHECK(default_theta_cuspidal(2, 0) == 3);
    for (int k = 1; k <= 10; ++k)
        for (int p = 0; p <= 1; ++p) {
            const int kp = default_theta_cuspidal(k, p);
            CHECK((kp == k - 1 || kp == k + 1));
            CHECK(triangular(kp) % 2 == p);
        }
    CHECK(formula_for(0, 0) == OmegaFormula::u1);
    CHECK(formula_for(1, 0) == OmegaFormula::u1);
    CHECK(formula_for(0, 1) == OmegaFormula::u2);
    CHECK(formula_for(2, 1) == OmegaFormula::u2);
}

TEST_CASE("theta rule output is validated") {
    HoweOptions bad;
    bad.theta = [](int, int) { return 0; };
    CHECK_THROWS_AS(theta_cuspidal(0, 1, bad), ValidationError);
}

TEST_CASE("omega examples") {
    const auto t00 = omega_unipotent(tower(0, 0), tower(0, 0), 0);
    REQUIRE(t00.row_labels.size() == 1);
    REQUIRE(t00.col_labels.size() == 1);
    CHECK(t00.at(0, 0) == 1);

    const auto t11 = omega_unipotent(tower(0, 1), tower(0, 1), 0);
    REQUIRE(t11.row_labels == std::vector<Bipartition>{kTriv1, kSgn1});
    REQUIRE(t11.col_labels == std::vector<Bipartition>{kTriv1, kSgn1});
    CHECK(t11.formula == OmegaFormula::u1);
    CHECK(t11.at(0, 0) == 1);
    CHECK(t11.at(0, 1) == 1);
    CHECK(t11.at(1, 0) == 1);
    CHECK(t11.at(1, 1) == 0);
    CHECK(t11.entries.size() == 3);

    const auto t10 = omega_unipotent(tower(0, 1), tower(0, 0), 0);
    REQUIRE(t10.col_labels == std::vector<Bipartition>{kEmpty});
    CHECK(t10.entries.size() == 1);
    CHECK(t10.at(0, 0) == 1);
    CHECK(t10.row_labels[0] == kTriv1);
}

TEST_CASE("below first occurrence the table is empty") {
    // k = 0 against an odd tower needs k' = 1, which first occurs at m' = m(1) = 0,
    // k = 2 against an even tower needs k' = 3 with m(3) = 3
    const auto t = omega_unipotent(tower(1, 1), tower(0, 2), 2);
    CHECK(t.k_prime == 3);
    CHECK(t.r_prime < 0);
    CHECK(t.empty());
    CHECK(t.col_labels.empty());
}

TEST_CASE("invalid tower data") {
    CHECK_THROWS_AS(omega_unipotent(tower(1, 1), tower(0, 1), 0), ValidationError);  // T(0) even
    CHECK_THROWS_AS(omega_unipotent(tower(1, 0), tower(0, 1), 2), ValidationError);  // m < m(2)
    CHECK_THROWS_AS(omega_unipotent({4, 0, 1}, tower(0, 1), 0), ValidationError);   // q even
}

TEST_CASE("serial and parallel tables agree, and match the oracle") {
    for (int k = 0; k <= 2; ++k)
        for (int pp = 0; pp <= 1; ++pp)
            for (int r = 0; r <= 3; ++r)
                for (int rp = 0; rp <= 3; ++rp) {
                    const int kp = default_theta_cuspidal(k, pp);
                    const TowerContext c = tower(triangular(k) % 2, witt_index_of_cuspidal(k) + r);
                    const TowerContext cp = tower(pp, witt_index_of_cuspidal(kp) + rp);
                    const auto t = omega_unipotent(c, cp, k);
                    CHECK(t == omega_unipotent_serial(c, cp, k));
                    const auto dense = oracle::omega_multiplicities(t);
                    for (std::size_t i = 0; i < t.row_labels.size(); ++i)
                        for (std::size_t j = 0; j < t.col_labels.size(); ++j) CHECK(dense[i][j] == t.at(i, j));
                }
}

TEST_CASE("theta images") {
    const auto w0 = theta_images({0, kEmpty}, tower(0, 0), tower(0, 0));
    REQUIRE(w0.size() == 1);
    CHECK(w0[0].first == SeriesLabel{0, kEmpty});
    CHECK(w0[0].second == 1);

    const auto triv = theta_images({0, kTriv1}, tower(0, 1), tower(0, 1));
    REQUIRE(triv.size() == 2);
    CHECK(triv[0].first.char_label == kTriv1);
    CHECK(triv[1].first.char_label == kSgn1);

    const auto sgn = theta_images({0, kSgn1}, tower(0, 1), tower(0, 1));
    REQUIRE(sgn.size() == 1);
    CHECK(sgn[0].first.char_label == kTriv1);

    CHECK(theta_images({0, kSgn1}, tower(0, 1), tower(0, 0)).empty());
    CHECK_THROWS_AS(theta_images({0, {{2}, {}}}, tower(0, 1), tower(0, 1)), ValidationError);
}

TEST_CASE("extremal images") {
    const auto single = extremal_images({0, kSgn1}, tower(0, 1), tower(0, 1));
    CHECK(single.min == single.max);

    const auto two = extremal_images({0, kTriv1}, tower(0, 1), tower(0, 1));
    CHECK(two.min.char_label == kSgn1);
    CHECK(two.max.char_label == kTriv1);

    CHECK_THROWS_AS(extremal_images({0, kSgn1}, tower(0, 1), tower(0, 0)), ValidationError);

    // an order ranking nothing is reported with the antichain as witness
    HoweOptions flat;
    flat.order = [](const SeriesLabel& a, const SeriesLabel& b) { return a == b; };
    try {
        (void)extremal_images({0, kTriv1}, tower(0, 1), tower(0, 1), flat);
        FAIL("expected NoUniqueExtremeError");
    } catch (const NoUniqueExtremeError& e) {
        CHECK(e.witness().size() == 2);
    }
}

TEST_CASE("series labels") {
    // U_4: k = 0 (W_2) and k = 3 is too big; k = 2 has T = 3, odd, excluded
    const auto labels = unipotent_series_labels(tower(0, 2));
    CHECK(labels.size() == 5);
    // U_3: k = 1 (W_1) and k = 2 (W_0)
    const auto odd = unipotent_series_labels(tower(1, 1));
    CHECK(odd.size() == 3);
}
