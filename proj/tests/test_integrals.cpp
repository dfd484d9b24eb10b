#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "trion/integrals.hpp"
#include "trion/rng.hpp"

using namespace trion;
using oracle::C;

namespace {

BasisFunction make_fn(C a, C b, C g, Part part, bool sym = false) {
    return {a, b, g, part, sym, +1};
}

BasisFunction random_fn(SplitMix64& rng, Part part, bool sym = false) {
    const C a{rng.next_in(0.4, 2.0), rng.next_in(-0.6, 0.6)};
    const C b{rng.next_in(0.4, 2.0), rng.next_in(-0.6, 0.6)};
    const C g{rng.next_in(0.2, 1.5), rng.next_in(-0.8, 0.8)};
    return make_fn(a, b, g, part, sym);
}

double part_product_integrand(const BasisFunction& fi, const BasisFunction& fj, double r1,
                              double r2, double R) {
    const C ui = std::exp(-C(fi.alpha) * r1 - C(fi.beta) * r2 - C(fi.gamma) * R);
    const C uj = std::exp(-C(fj.alpha) * r1 - C(fj.beta) * r2 - C(fj.gamma) * R);
    const double pi_val = fi.part == Part::Re ? ui.real() : ui.imag();
    const double pj_val = fj.part == Part::Re ? uj.real() : uj.imag();
    return pi_val * pj_val;
}

} // namespace

TEST_CASE("separable overlap anchor: pi^2 for the (1,1,0) real function") {
    const auto f = make_fn(1.0, 1.0, 0.0, Part::Re);
    CHECK_THAT(overlap_element(f, f), Catch::Matchers::WithinRel(kPi * kPi, 1e-13));
}

TEST_CASE("delta anchor: pi for the (1,1,0) real function") {
    const auto f = make_fn(1.0, 1.0, 0.0, Part::Re);
    CHECK_THAT(delta_element(f, f, DeltaCenter::R1), Catch::Matchers::WithinRel(kPi, 1e-13));
    CHECK_THAT(delta_element(f, f, DeltaCenter::R2), Catch::Matchers::WithinRel(kPi, 1e-13));
}

TEST_CASE("screened-charge Rayleigh quotient for helium") {
    // symmetrized real function with a = b = 27/16, g = 0
    const double zeff = 27.0 / 16.0;
    const auto f = make_fn(zeff, zeff, 0.0, Part::Re, true);
    const auto coeffs = kinetic_coefficients(preset("helium"));
    const double h = hamiltonian_element(f, f, coeffs);
    const double o = overlap_element(f, f);
    CHECK_THAT(h / o, Catch::Matchers::WithinAbs(-zeff * zeff, 1e-10));

    // the 1/R sub-term alone: (5/8) zeff
    KineticCoefficients rr{};
    rr.zz23 = 1.0;
    const double hr = hamiltonian_element(f, f, rr);
    CHECK_THAT(hr / o, Catch::Matchers::WithinAbs(0.625 * zeff, 1e-10));
}

TEST_CASE("overlap matches the triangle-domain quadrature oracle") {
    SplitMix64 rng(77, 0);
    // same triple, Re x Im, plus one fully random mixed pair
    const auto base = random_fn(rng, Part::Re);
    auto im_twin = base;
    im_twin.part = Part::Im;
    const auto fr = random_fn(rng, Part::Im);

    for (const auto& [fi, fj] : {std::pair{base, im_twin}, std::pair{base, fr}}) {
        const double got = overlap_element(fi, fj);
        auto integrand = [&](double r1, double r2, double R) -> C {
            return C(kVolumeFactor * r1 * r2 * R * part_product_integrand(fi, fj, r1, r2, R),
                     0.0);
        };
        const double c1 = fi.alpha.real() + fj.alpha.real();
        const double c2 = fi.beta.real() + fj.beta.real();
        const double want = oracle::quad_triangle(integrand, c1, c2).real();
        INFO("oracle=" << want << " analytic=" << got);
        REQUIRE(std::abs(got - want) <= 1e-8 * std::abs(want));
    }
}

TEST_CASE("delta elements match the collapsed radial oracle") {
    SplitMix64 rng(78, 0);
    for (int trial = 0; trial < 6; ++trial) {
        const auto fi = random_fn(rng, trial % 2 ? Part::Re : Part::Im);
        const auto fj = random_fn(rng, trial % 3 ? Part::Im : Part::Re);
        const double got1 = delta_element(fi, fj, DeltaCenter::R1);
        auto radial1 = [&](double r) {
            // r1 -> 0 collapses R -> r2
            return 4.0 * kPi * r * r * part_product_integrand(fi, fj, 0.0, r, r);
        };
        const double want1 = oracle::radial_quad(
            radial1, fi.beta.real() + fi.gamma.real() + fj.beta.real() + fj.gamma.real());
        REQUIRE(std::abs(got1 - want1) <= 1e-8 * std::max(std::abs(want1), 1e-6));

        const double got2 = delta_element(fi, fj, DeltaCenter::R2);
        auto radial2 = [&](double r) {
            return 4.0 * kPi * r * r * part_product_integrand(fi, fj, r, 0.0, r);
        };
        const double want2 = oracle::radial_quad(
            radial2, fi.alpha.real() + fi.gamma.real() + fj.alpha.real() + fj.gamma.real());
        REQUIRE(std::abs(got2 - want2) <= 1e-8 * std::max(std::abs(want2), 1e-6));
    }
}

TEST_CASE("element symmetry in (i, j)") {
    SplitMix64 rng(79, 0);
    const auto coeffs = kinetic_coefficients(preset("hdplus"));
    for (int trial = 0; trial < 10; ++trial) {
        const auto fi = random_fn(rng, trial % 2 ? Part::Re : Part::Im, trial % 3 == 0);
        auto fj = random_fn(rng, trial % 4 < 2 ? Part::Re : Part::Im, trial % 3 == 0);
        const double oij = overlap_element(fi, fj);
        const double oji = overlap_element(fj, fi);
        CHECK_THAT(oji, Catch::Matchers::WithinAbs(oij, 1e-12 * (1.0 + std::abs(oij))));
        const double hij = hamiltonian_element(fi, fj, coeffs);
        const double hji = hamiltonian_element(fj, fi, coeffs);
        CHECK_THAT(hji, Catch::Matchers::WithinAbs(hij, 1e-12 * (1.0 + std::abs(hij))));
    }
}

TEST_CASE("exchange covariance for symmetric systems") {
    SplitMix64 rng(80, 0);
    const auto coeffs = kinetic_coefficients(preset("helium"));
    for (int trial = 0; trial < 6; ++trial) {
        const auto fi = random_fn(rng, Part::Re);
        const auto fj = random_fn(rng, Part::Im);
        const double h = hamiltonian_element(fi, fj, coeffs);
        const double hx = hamiltonian_element(exchange(fi), exchange(fj), coeffs);
        CHECK_THAT(hx, Catch::Matchers::WithinAbs(h, 1e-11 * (1.0 + std::abs(h))));
        const double o = overlap_element(fi, fj);
        const double ox = overlap_element(exchange(fi), exchange(fj));
        CHECK_THAT(ox, Catch::Matchers::WithinAbs(o, 1e-11 * (1.0 + std::abs(o))));
    }
}

TEST_CASE("delta of symmetrized functions is exchange-symmetric") {
    const auto f = make_fn({1.1, 0.3}, {1.1, 0.3}, {0.9, 0.5}, Part::Re, true);
    const double d1 = delta_element(f, f, DeltaCenter::R1);
    const double d2 = delta_element(f, f, DeltaCenter::R2);
    CHECK_THAT(d1, Catch::Matchers::WithinAbs(d2, 1e-10 * std::abs(d1)));

    const auto g = make_fn({0.8, -0.2}, {1.3, 0.1}, {1.0, 0.4}, Part::Im, true);
    const double e1 = delta_element(f, g, DeltaCenter::R1);
    const double e2 = delta_element(f, g, DeltaCenter::R2);
    CHECK_THAT(e1, Catch::Matchers::WithinAbs(e2, 1e-10 * (1.0 + std::abs(e1))));
}

TEST_CASE("divergent pairs are rejected") {
    const auto good = make_fn(1.0, 1.0, 1.0, Part::Re);
    const auto bad = make_fn({0.0, 0.5}, {0.0, 0.3}, {1.0, 0.0}, Part::Re); // a+b pair sum 0
    CHECK_THROWS_AS(overlap_element(bad, bad), DivergentIntegralError);
    CHECK(overlap_element(good, good) > 0.0);
}

TEST_CASE("build_matrices assembles element-wise values symmetrically") {
    const auto subsets = preset_subsets("h2plus", 7);
    BasisSet small;
    small.seed = 3;
    small.subsets = {subsets[0]};
    auto fn = generate_basis({subsets[0]}, 3, true).functions;
    small.functions = {fn[0], fn[1]}; // one Re + Im pair, N = 2
    const auto sys = preset("h2plus");
    const auto m = build_matrices(small, sys);
    const auto coeffs = kinetic_coefficients(sys);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const int a = std::min(i, j), b = std::max(i, j);
            CHECK(m.O(i, j) == overlap_element(small.functions[a], small.functions[b]));
            CHECK(m.H(i, j) ==
                  hamiltonian_element(small.functions[a], small.functions[b], coeffs));
            CHECK(m.D1(i, j) ==
                  delta_element(small.functions[a], small.functions[b], DeltaCenter::R1));
        }
    }
    CHECK(m.O(0, 1) == m.O(1, 0));
    CHECK(m.H(0, 1) == m.H(1, 0));
    CHECK(m.O(0, 0) > 0.0);
    CHECK(m.O(1, 1) > 0.0);
}

TEST_CASE("extended build agrees with the double build") {
    const auto subsets = preset_subsets("helium", 7);
    BasisSet small;
    small.seed = 5;
    auto fn = generate_basis({subsets[0]}, 5, true).functions;
    small.functions.assign(fn.begin(), fn.begin() + 8);
    const auto sys = preset("helium");
    const auto md = build_matrices(small, sys);
    const auto mx = build_matrices_extended(small, sys);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            CHECK_THAT(to_double(mx.H(i, j)), Catch::Matchers::WithinRel(md.H(i, j), 1e-12));
            CHECK_THAT(to_double(mx.O(i, j)), Catch::Matchers::WithinRel(md.O(i, j), 1e-12));
        }
    }
}
