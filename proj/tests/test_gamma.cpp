#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "trion/gamma.hpp"
#include "trion/rng.hpp"

using namespace trion;
using oracle::C;

TEST_CASE("base term set and simple anchors") {
    const auto& base = gamma_term_set(0, 0, 0);
    REQUIRE(base.terms.size() == 1);
    CHECK(base.terms[0].p == 1);
    CHECK(base.terms[0].q == 1);
    CHECK(base.terms[0].s == 1);
    CHECK(base.terms[0].coeff == 2.0);

    CHECK_THAT(gamma_integral(0, 0, 0, 1.0, 1.0, 1.0).real(),
               Catch::Matchers::WithinRel(0.25, 1e-15));
    // term-set expansion: 2/(4*2*2) + 2/(2*2*4)
    CHECK_THAT(gamma_integral(1, 0, 0, 1.0, 1.0, 1.0).real(),
               Catch::Matchers::WithinRel(0.25, 1e-15));
    // g = 0 reduces the R integral, leaving 8/(a^3 b^3)
    CHECK_THAT(gamma_integral(1, 1, 1, 1.0, 1.0, 0.0).real(),
               Catch::Matchers::WithinRel(8.0, 1e-14));
    CHECK_THAT(gamma_integral(1, 1, 1, 2.0, 2.0, 0.0).real(),
               Catch::Matchers::WithinRel(0.125, 1e-14));
}

TEST_CASE("quadrature oracle agreement for orders <= 2") {
    SplitMix64 rng(2024, 5);
    for (int trial = 0; trial < 4; ++trial) {
        const C a{rng.next_in(0.1, 3.0), rng.next_in(-1.0, 1.0)};
        const C b{rng.next_in(0.1, 3.0), rng.next_in(-1.0, 1.0)};
        const C g{rng.next_in(0.1, 3.0), rng.next_in(-1.0, 1.0)};
        for (int l = 0; l <= 2; ++l) {
            for (int m = 0; m <= 2; ++m) {
                for (int n = 0; n <= 2; ++n) {
                    const C exact = gamma_integral(l, m, n, a, b, g);
                    const C quad = oracle::gamma_quad(l, m, n, a, b, g);
                    INFO("l,m,n = " << l << m << n << " a=" << a << " b=" << b << " g=" << g);
                    REQUIRE(std::abs(quad - exact) <= 1e-8 * std::abs(exact));
                }
            }
        }
    }
}

TEST_CASE("differentiation consistency via central differences") {
    const C a{1.3, 0.4}, b{0.8, -0.2}, g{1.1, 0.7};
    const double h = 1e-6;
    for (int l = 0; l <= 2; ++l) {
        for (int m = 0; m <= 2; ++m) {
            for (int n = 0; n <= 2; ++n) {
                // -d/da Gamma(l,m,n) = Gamma(l+1,m,n)
                const C fd_a = (gamma_integral(l, m, n, a - C{h, 0}, b, g) -
                                gamma_integral(l, m, n, a + C{h, 0}, b, g)) /
                               (2.0 * h);
                const C up_a = gamma_integral(l + 1, m, n, a, b, g);
                REQUIRE(std::abs(fd_a - up_a) <= 1e-6 * std::abs(up_a));

                const C fd_b = (gamma_integral(l, m, n, a, b - C{h, 0}, g) -
                                gamma_integral(l, m, n, a, b + C{h, 0}, g)) /
                               (2.0 * h);
                const C up_b = gamma_integral(l, m + 1, n, a, b, g);
                REQUIRE(std::abs(fd_b - up_b) <= 1e-6 * std::abs(up_b));

                const C fd_g = (gamma_integral(l, m, n, a, b, g - C{h, 0}) -
                                gamma_integral(l, m, n, a, b, g + C{h, 0})) /
                               (2.0 * h);
                const C up_g = gamma_integral(l, m, n + 1, a, b, g);
                REQUIRE(std::abs(fd_g - up_g) <= 1e-6 * std::abs(up_g));
            }
        }
    }
}

TEST_CASE("divergent and unsupported arguments are rejected") {
    CHECK_THROWS_AS(gamma_integral(0, 0, 0, {-2.0, 0.0}, 1.0, 1.0), DivergentIntegralError);
    CHECK_THROWS_AS(gamma_integral(0, 0, 0, 1.0, {-0.5, 0.0}, {-0.6, 0.0}),
                    DivergentIntegralError);
    CHECK_THROWS_AS(gamma_term_set(7, 0, 0), UnsupportedOrderError);
    CHECK_THROWS_AS(gamma_term_set(0, -1, 0), UnsupportedOrderError);
    // boundary order works
    CHECK_NOTHROW(gamma_integral(6, 6, 6, 1.0, 1.0, 1.0));
}

TEST_CASE("conjugation symmetry") {
    const C a{1.3, 0.4}, b{0.8, -0.2}, g{1.1, 0.7};
    const C v = gamma_integral(2, 1, 0, a, b, g);
    const C vc = gamma_integral(2, 1, 0, std::conj(a), std::conj(b), std::conj(g));
    CHECK_THAT(vc.real(), Catch::Matchers::WithinRel(v.real(), 1e-14));
    CHECK_THAT(vc.imag(), Catch::Matchers::WithinRel(-v.imag(), 1e-14));
}

TEST_CASE("double-double evaluation agrees with double") {
    GammaEvaluator<DoubleDouble> dd({DoubleDouble(1.3), DoubleDouble(0.4)},
                                    {DoubleDouble(0.8), DoubleDouble(-0.2)},
                                    {DoubleDouble(1.1), DoubleDouble(0.7)});
    GammaEvaluator<double> d({1.3, 0.4}, {0.8, -0.2}, {1.1, 0.7});
    for (int l = 0; l <= 3; ++l) {
        for (int m = 0; m <= 3; ++m) {
            const auto a = dd.value(l, m, 1);
            const auto b = d.value(l, m, 1);
            CHECK_THAT(to_double(a.re), Catch::Matchers::WithinRel(b.re, 1e-13));
            CHECK_THAT(to_double(a.im), Catch::Matchers::WithinRel(b.im, 1e-13));
        }
    }
}
