#include "doctest.h"

#include "howe/errors.hpp"
#include "howe/json_io.hpp"
#include "howe/lusztig_reduction.hpp"
#include "howe/spec_grammar.hpp"

using namespace howe;

namespace {

TowerContext tower(int parity, int witt) { return {3, parity, witt}; }

}  // namespace

TEST_CASE("orbit closure") {
    const auto one = orbit_closure(3, 1, 0);
    CHECK(one.exponents == std::vector<std::int64_t>{0});
    CHECK(one.is_one());

    const auto minus = orbit_closure(3, 1, 4);
    CHECK(minus.modulus == 8);
    CHECK(minus.exponents == std::vector<std::int64_t>{4});
    CHECK(minus.is_minus_one());

    const auto pair = orbit_closure(3, 1, 1);
    CHECK(pair.exponents == std::vector<std::int64_t>{1, 5});
    CHECK(pair.size() == 2);
    CHECK_FALSE(pair.is_one());

    CHECK_THROWS_AS(orbit_closure(3, 1, std::nullopt), ValidationError);
    CHECK(exponent_modulus(3, 2) == 80);
    CHECK(exponent_modulus(5, 1) == 24);
}

TEST_CASE("orbit classification") {
    CHECK(classify_orbit(orbit_closure(3, 1, 4)) == FactorKind::unitary);
    CHECK(classify_orbit(orbit_closure(3, 1, 1)) == FactorKind::linear);
    CHECK(classify_orbit(orbit_closure(3, 1, 2)) == FactorKind::unitary);  // -3*2 = 2 mod 8
}

TEST_CASE("centralizer decomposition") {
    const auto trivial = centralizer_decomposition(SemisimpleDescriptor::trivial(3, 4, 8), tower(0, 2));
    CHECK(trivial.factors.empty());
    CHECK(trivial.reduction_l == 0);
    CHECK(trivial.unipotent_block == tower(0, 2));

    const auto s = parse_orbits("0^1,4^2", 3, 1);
    const auto dec = centralizer_decomposition(s, tower(1, 1));
    REQUIRE(dec.factors.size() == 1);
    CHECK(dec.factors[0] == CentralizerFactor{FactorKind::unitary, 2, 1});
    CHECK(dec.factors[0].to_string() == "U_2(q^1)");
    CHECK(dec.unipotent_block.dimension() == 1);
    CHECK(dec.reduction_l == 1);

    CHECK_THROWS_AS(centralizer_decomposition(s, tower(0, 2)), ValidationError);
}

TEST_CASE("match_semisimple") {
    const auto t = SemisimpleDescriptor::trivial(3, 3, 8);
    CHECK(match_semisimple(t, tower(1, 1), tower(0, 3)) == SemisimpleDescriptor::trivial(3, 6, 8));

    const auto s = parse_orbits("4^2,0^1", 3, 1);
    const auto s5 = match_semisimple(s, tower(1, 1), tower(1, 2));
    CHECK(s5.dimension() == 5);
    CHECK(s5.one_multiplicity() == 3);
    CHECK(centralizer_decomposition(s5, tower(1, 2)).factors == centralizer_decomposition(s, tower(1, 1)).factors);

    CHECK_THROWS_AS(match_semisimple(parse_orbits("4^4", 3, 1), tower(0, 2), tower(0, 1)), ValidationError);
}

TEST_CASE("support transport") {
    const CuspidalSupport start{{}, CuspidalBase::unipotent(0)};
    const auto up = transport_support(start, tower(0, 0), tower(0, 3));
    REQUIRE(up);
    CHECK(up->gl_part.size() == 3);
    CHECK(up->trivial_count() == 3);
    CHECK(up->base.k == 0);

    const GlCuspidal sigma{1, "sigma"};
    const CuspidalSupport one{{sigma}, CuspidalBase::unipotent(0)};
    const auto same = transport_support(one, tower(0, 1), tower(0, 1));
    REQUIRE(same);
    CHECK(same->gl_part == std::vector<GlCuspidal>{sigma});

    const CuspidalSupport three{{trivial_gl1(), trivial_gl1(), sigma}, CuspidalBase::unipotent(0)};
    const auto down = transport_support(three, tower(0, 3), tower(0, 1));
    REQUIRE(down);
    CHECK(down->gl_part == std::vector<GlCuspidal>{sigma});

    CHECK_THROWS_AS(transport_support(three, tower(0, 3), tower(0, 0)), ValidationError);

    // m' below first occurrence: k = 2 to an even tower needs m' >= 3
    const CuspidalSupport two{{}, CuspidalBase::unipotent(2)};
    CHECK_FALSE(transport_support(two, tower(1, 1), tower(0, 2)));
    const auto at = transport_support(two, tower(1, 1), tower(0, 3));
    REQUIRE(at);
    CHECK(at->base.k == 3);
    CHECK(at->gl_part.empty());
}

TEST_CASE("non-unipotent base carries its partner") {
    const CuspidalBase phi{std::nullopt, "phi", 1, "phi'", 2};
    const CuspidalSupport s{{trivial_gl1()}, phi};
    CHECK_FALSE(transport_support(s, tower(0, 2), tower(0, 1)));
    const auto t = transport_support(s, tower(0, 2), tower(0, 4));
    REQUIRE(t);
    CHECK(t->base.label == "phi'");
    CHECK(t->gl_part.size() == 2);
}

TEST_CASE("transport of cuspidal pairs") {
    const auto pair = unipotent_cuspidal_pair(0, tower(0, 2));
    const auto moved = transport_series(pair, tower(0, 2), tower(0, 3));
    REQUIRE(moved);
    CHECK(moved->base_k == 0);
    CHECK(moved->torus_rank() == 3);

    const auto w = weyl_of_cuspidal_pair(pair, tower(0, 2));
    CHECK(w.hash_factors.empty());
    CHECK(w.b_rank == 2);

    CuspidalPair minus{{}, 0, parse_orbits("4^2,0^2", 3, 1)};
    const auto wm = weyl_of_cuspidal_pair(minus, tower(0, 2));
    CHECK(wm.hash_factors.size() == 1);
    CHECK(wm.b_rank == 1);
}

TEST_CASE("omega_full") {
    const auto trivial = omega_full(unipotent_cuspidal_pair(0, tower(0, 1)), tower(0, 1), tower(0, 1));
    REQUIRE(trivial);
    CHECK(trivial->hash_factors.empty());
    CHECK(trivial->reduction_l == 0);
    CHECK(dump(json(trivial->unipotent_table)) == dump(json(omega_unipotent(tower(0, 1), tower(0, 1), 0))));

    CuspidalPair minus{{}, 0, parse_orbits("4^2,0^2", 3, 1)};
    const auto full = omega_full(minus, tower(0, 2), tower(0, 2));
    REQUIRE(full);
    CHECK(full->reduction_l == 1);
    CHECK(full->reduction_l_prime == 1);
    CHECK(full->pairing == "diagonal");
    CHECK(full->unipotent_table == omega_unipotent(tower(0, 1), tower(0, 1), 0));
}

TEST_CASE("Lusztig coordinates round trip") {
    const auto s = parse_orbits("4^2,0^2", 3, 1);
    const auto ctx = tower(0, 2);
    const auto reps = series_representations(s, ctx);
    CHECK(!reps.empty());
    for (const auto& pi : reps) {
        const auto coords = lusztig_coordinates(pi, ctx);
        CHECK(coords.reduction_l == 1);
        CHECK(from_lusztig_coordinates(coords, s, ctx) == pi);
    }
}

TEST_CASE("membership agrees with enumeration") {
    const auto s = parse_orbits("4^2,0^2", 3, 1);
    const auto ctx = tower(0, 2);
    const auto ctx_prime = tower(0, 2);
    const auto s_prime = match_semisimple(s, ctx, ctx_prime);
    for (const auto& pi : series_representations(s, ctx)) {
        const auto images = theta_full(pi, ctx, ctx_prime);
        for (const auto& pi_prime : series_representations(s_prime, ctx_prime)) {
            const bool listed = std::find(images.begin(), images.end(), pi_prime) != images.end();
            CHECK(in_theta(pi, pi_prime, ctx, ctx_prime) == listed);
        }
    }
}
