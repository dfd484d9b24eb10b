#include <catch2/catch_amalgamated.hpp>

#include "trion/system.hpp"

using namespace trion;

TEST_CASE("helium preset: infinite-mass kinetic coefficients") {
    const auto sys = preset("helium");
    REQUIRE(sys.m1.infinite);
    REQUIRE(sys.symmetric_23);
    const auto k = kinetic_coefficients(sys);
    CHECK(k.inv_2m12 == 0.5);
    CHECK(k.inv_2m13 == 0.5);
    CHECK(k.inv_m1 == 0.0);
    CHECK(k.zz12 == -2.0);
    CHECK(k.zz13 == -2.0);
    CHECK(k.zz23 == +1.0);
}

TEST_CASE("h2plus preset: reduced masses from the CODATA 2018 ratio") {
    const auto sys = preset("h2plus");
    const auto k = kinetic_coefficients(sys);
    const double mp = 1836.15267343;
    CHECK(k.inv_m1 == 1.0);
    CHECK_THAT(k.inv_2m12, Catch::Matchers::WithinRel((1.0 + mp) / (2.0 * mp), 1e-15));
    CHECK(k.inv_2m12 == k.inv_2m13);
    CHECK(k.zz12 == -1.0);
    CHECK(k.zz23 == +1.0);
}

TEST_CASE("hdplus preset: deuteron first, symmetry broken") {
    const auto sys = preset("hdplus");
    CHECK_FALSE(sys.symmetric_23);
    CHECK(sys.m2.value == 3670.48296788);
    CHECK(sys.m3.value == 1836.15267343);
    const auto k = kinetic_coefficients(sys);
    CHECK(k.inv_2m12 != k.inv_2m13);
    CHECK(k.inv_2m12 < k.inv_2m13); // heavier particle 2 -> smaller coefficient
}

TEST_CASE("hminus preset") {
    const auto sys = preset("hminus");
    CHECK(sys.Z1 == 1.0);
    CHECK(sys.Z2 == -1.0);
    CHECK(sys.symmetric_23);
    CHECK(sys.total_charge() == -1.0);
}

TEST_CASE("unknown preset names fail with the valid list") {
    REQUIRE_THROWS_AS(preset("positronium"), LookupError);
    REQUIRE_THROWS_WITH(preset("positronium"), Catch::Matchers::ContainsSubstring("h2plus"));
}

TEST_CASE("invalid systems are rejected") {
    ThreeBodySystem s{"bad", Mass::finite(-1.0), Mass::finite(1.0), Mass::finite(1.0),
                      1.0,   -1.0,              -1.0,             true};
    REQUIRE_THROWS_AS(kinetic_coefficients(s), InvalidSystemError);

    ThreeBodySystem flag{"flag", Mass::finite(1.0), Mass::finite(2.0), Mass::finite(3.0),
                         1.0,    -1.0,             -1.0,             true};
    REQUIRE_THROWS_AS(flag.validate(), InvalidSystemError);
}

TEST_CASE("swapping particles 2 and 3 swaps the paired coefficients") {
    for (const char* name : {"h2plus", "hdplus", "helium", "hminus"}) {
        auto sys = preset(name);
        auto swapped = swap_particles_23(sys);
        swapped.symmetric_23 = (swapped.m2 == swapped.m3) && (swapped.Z2 == swapped.Z3);
        const auto a = kinetic_coefficients(sys);
        const auto b = kinetic_coefficients(swapped);
        CHECK(a.inv_2m12 == b.inv_2m13);
        CHECK(a.inv_2m13 == b.inv_2m12);
        CHECK(a.zz12 == b.zz13);
        CHECK(a.zz13 == b.zz12);
        CHECK(a.inv_m1 == b.inv_m1);
        CHECK(a.zz23 == b.zz23);
    }
}

TEST_CASE("symmetric systems have exactly equal paired coefficients") {
    for (const char* name : {"h2plus", "helium", "hminus"}) {
        const auto k = kinetic_coefficients(preset(name));
        CHECK(k.inv_2m12 == k.inv_2m13);
        CHECK(k.zz12 == k.zz13);
    }
}
