#include <catch2/catch_amalgamated.hpp>

#include "trion/basis.hpp"

using namespace trion;

TEST_CASE("splitmix64 reference outputs") {
    // pinned first outputs of stream 0 / seed 0 and stream 1 / seed 42
    SplitMix64 a(0, 0);
    CHECK(a.next_u64() == 0x6E789E6AA1B965F4ULL);
    CHECK(a.next_u64() == 0x06C45D188009454FULL);
    SplitMix64 b(42, 1);
    CHECK(b.next_u64() == 0x47526757130F9F52ULL);

    SplitMix64 u(123, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.next_unit();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
    }
}

static std::vector<IntervalSubset> h2plus_subsets() { return preset_subsets("h2plus", 7); }

TEST_CASE("table subsets generate N=128 with 64 distinct triples") {
    const auto basis = generate_basis(h2plus_subsets(), 7, true);
    REQUIRE(basis.size() == 128);
    REQUIRE(basis.qubits() == 7);
    int distinct = 0;
    for (int i = 0; i < basis.size(); i += 2) {
        REQUIRE(basis.functions[i].part == Part::Re);
        REQUIRE(basis.functions[i + 1].part == Part::Im);
        REQUIRE(basis.functions[i].alpha == basis.functions[i + 1].alpha);
        ++distinct;
    }
    CHECK(distinct == 64);
    for (const auto& f : basis.functions) {
        CHECK(f.symmetrized);
        CHECK(f.sym_sign == +1);
        CHECK(f.exponents_ok());
    }
}

TEST_CASE("generation is deterministic") {
    const auto a = generate_basis(h2plus_subsets(), 12345, true);
    const auto b = generate_basis(h2plus_subsets(), 12345, true);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
        CHECK(a.functions[i].alpha == b.functions[i].alpha);
        CHECK(a.functions[i].beta == b.functions[i].beta);
        CHECK(a.functions[i].gamma == b.functions[i].gamma);
    }
    const auto c = generate_basis(h2plus_subsets(), 12346, true);
    bool any_different = false;
    for (int i = 0; i < a.size(); ++i)
        if (a.functions[i].alpha != c.functions[i].alpha) any_different = true;
    CHECK(any_different);
}

TEST_CASE("non-power-of-two totals are rejected") {
    auto subsets = h2plus_subsets();
    subsets.back().count += 2;
    REQUIRE_THROWS_AS(generate_basis(subsets, 1, true), SizeError);
}

TEST_CASE("degenerate all-zero imaginary intervals fail after retries") {
    IntervalSubset s;
    s.re_alpha = {1.0, 1.0};
    s.im_alpha = {0.0, 0.0};
    s.re_beta = {1.0, 1.0};
    s.im_beta = {0.0, 0.0};
    s.re_gamma = {0.0, 0.0};
    s.im_gamma = {0.0, 0.0};
    s.count = 2;
    REQUIRE_THROWS_AS(generate_basis({s}, 7, false), SizeError);
}

TEST_CASE("exchange swaps alpha and beta and is an involution") {
    BasisFunction f{{1.0, 0.1}, {0.3, 0.0}, {3.0, 2.0}, Part::Re, false, +1};
    const auto g = exchange(f);
    CHECK(g.alpha == Complexd(0.3, 0.0));
    CHECK(g.beta == Complexd(1.0, 0.1));
    CHECK(g.gamma == f.gamma);
    CHECK(g.part == f.part);

    const auto gg = exchange(g);
    CHECK(gg.alpha == f.alpha);
    CHECK(gg.beta == f.beta);

    BasisFunction fixed{{1.0, 0.5}, {1.0, 0.5}, {2.0, 0.0}, Part::Im, false, +1};
    const auto fx = exchange(fixed);
    CHECK(fx.alpha == fixed.alpha);
    CHECK(fx.beta == fixed.beta);
}

TEST_CASE("sampling marginals stay inside intervals and center on the midpoint") {
    IntervalSubset s;
    s.re_alpha = {0.5, 2.5};
    s.im_alpha = {-0.25, 0.75};
    s.re_beta = {1.0, 1.5};
    s.im_beta = {-1.0, 1.0};
    s.re_gamma = {2.0, 4.0};
    s.im_gamma = {0.5, 0.6};
    const int draws = 16384; // functions (2 per triple)
    s.count = draws;
    const auto basis = generate_basis({s}, 99, false);

    auto check_component = [&](auto getter, double lo, double hi) {
        double sum = 0.0, mn = 1e300, mx = -1e300;
        int n = 0;
        for (int i = 0; i < basis.size(); i += 2) { // one triple per pair
            const double v = getter(basis.functions[i]);
            sum += v;
            mn = std::min(mn, v);
            mx = std::max(mx, v);
            ++n;
        }
        REQUIRE(mn >= lo);
        REQUIRE(mx <= hi);
        const double mean = sum / n;
        const double sigma = (hi - lo) / std::sqrt(12.0) / std::sqrt(double(n));
        CHECK(std::abs(mean - 0.5 * (lo + hi)) < 3.0 * sigma);
    };
    check_component([](const BasisFunction& f) { return f.alpha.real(); }, 0.5, 2.5);
    check_component([](const BasisFunction& f) { return f.alpha.imag(); }, -0.25, 0.75);
    check_component([](const BasisFunction& f) { return f.beta.real(); }, 1.0, 1.5);
    check_component([](const BasisFunction& f) { return f.gamma.imag(); }, 0.5, 0.6);
}

TEST_CASE("every preset table satisfies pairwise positivity at build") {
    // generate_basis checks all pairs internally for N <= 256
    for (const char* name : {"h2plus", "hdplus", "helium", "hminus"}) {
        const auto basis = generate_basis(preset_subsets(name, 7), 1, name != std::string("hdplus"));
        REQUIRE(basis.size() == 128);
    }
    const auto big = generate_basis(preset_subsets("h2plus", 8), 1, true);
    REQUIRE(big.size() == 256);
}

TEST_CASE("basis json is byte-stable") {
    const auto a = generate_basis(h2plus_subsets(), 7, true);
    const auto b = generate_basis(h2plus_subsets(), 7, true);
    REQUIRE(basis_to_json(a, "h2plus") == basis_to_json(b, "h2plus"));
    CHECK(basis_to_json(a, "h2plus").find("splitmix64") != std::string::npos);
}

TEST_CASE("subset_from_flat matches the table column order") {
    const std::vector<double> row{1.0, 2.0, -0.1, 0.1, 0.5, 0.6, 0.0, 0.0, 3.0, 4.0, 1.0, 2.0, 4};
    const auto s = subset_from_flat(row);
    CHECK(s.re_alpha.lo == 1.0);
    CHECK(s.re_alpha.hi == 2.0);
    CHECK(s.im_alpha.lo == -0.1);
    CHECK(s.re_beta.lo == 0.5);
    CHECK(s.im_beta.hi == 0.0);
    CHECK(s.re_gamma.hi == 4.0);
    CHECK(s.im_gamma.lo == 1.0);
    CHECK(s.count == 4);
    REQUIRE_THROWS_AS(subset_from_flat({1.0, 2.0}), SizeError);
}
