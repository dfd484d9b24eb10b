#pragma once

// Test-only oracles, independent of the library's analytic integral path:
// adaptive quadrature over the (r1, r2, R) triangle domain, for both
// complex exponential integrands (Gamma checks) and real part-product
// integrands (overlap / delta checks).
//
// The two semi-infinite directions use an exp-sinh (double-exponential)
// transform with trapezoid sums refined by step halving until the value
// stops moving; the finite inner direction and the [0, r1] piece of the
// middle integral use adaptive Gauss-Kronrod 15(7).

#include <cmath>
#include <complex>

namespace oracle {

using C = std::complex<double>;

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
inline constexpr double kNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr double kWeightsK[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double kWeightsG[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870};

template <typename F>
C gk15(const F& f, double a, double b, double& err) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    C kres = 0.0, gres = 0.0;
    for (int i = 0; i < 15; ++i) {
        const C v = f(mid + h * kNodes[i]);
        kres += kWeightsK[i] * v;
        if (i % 2 == 1) gres += kWeightsG[i / 2] * v;
    }
    kres *= h;
    gres *= h;
    err = std::abs(kres - gres);
    return kres;
}

struct Tol {
    double rtol = 1e-11;
    double atol = 0.0;
};

template <typename F>
C adaptive_gk(const F& f, double a, double b, Tol tol, int depth = 0) {
    double err;
    const C v = gk15(f, a, b, err);
    if (err <= std::max(tol.atol, tol.rtol * std::abs(v)) || depth >= 22 || b - a < 1e-300)
        return v;
    const double mid = 0.5 * (a + b);
    Tol half{tol.rtol, 0.5 * tol.atol};
    return adaptive_gk(f, a, mid, half, depth + 1) + adaptive_gk(f, mid, b, half, depth + 1);
}

// Integral of g over [0, inf) for integrands decaying like exp(-c r):
// substitute r = exp((pi/2) sinh t) / c and trapezoid in t, halving the
// step (with node reuse) until the sum stabilizes.
template <typename F>
C exp_sinh(const F& g, double c, Tol tol) {
    const double cc = std::max(c, 0.05);
    auto r_of = [&](double t) { return std::exp(1.5707963267948966 * std::sinh(t)) / cc; };
    auto w_of = [&](double t, double r) { return 1.5707963267948966 * std::cosh(t) * r; };
    // node range from negligible-r bounds: r in [1e-14/c, 46/c]
    auto t_of_r = [&](double rc) { return std::asinh(std::log(rc) / 1.5707963267948966); };
    const double t_lo = t_of_r(1e-14);
    const double t_hi = t_of_r(46.0);

    double h = 0.25;
    auto term = [&](double t) -> C {
        const double r = r_of(t);
        return g(r) * w_of(t, r);
    };
    // base trapezoid
    C sum = 0.0;
    {
        const long k_lo = static_cast<long>(std::ceil(t_lo / h));
        const long k_hi = static_cast<long>(std::floor(t_hi / h));
        for (long k = k_lo; k <= k_hi; ++k) sum += term(k * h);
        sum *= h;
    }
    for (int level = 0; level < 6; ++level) {
        const double h2 = 0.5 * h;
        C odd = 0.0;
        const long k_lo = static_cast<long>(std::ceil(t_lo / h2));
        const long k_hi = static_cast<long>(std::floor(t_hi / h2));
        for (long k = k_lo | 1; k <= k_hi; k += 2) odd += term(k * h2);
        const C refined = 0.5 * sum + h2 * odd;
        const double delta = std::abs(refined - sum);
        sum = refined;
        h = h2;
        if (delta <= std::max(tol.atol, tol.rtol * std::abs(sum)) && level >= 1) break;
    }
    return sum;
}

// Triple integral of F(r1, r2, R) over r1, r2 in [0, inf),
// R in [|r1 - r2|, r1 + r2]; c1 and c2 are decay-rate hints.
template <typename F>
C triangle_domain(const F& f, double c1, double c2, Tol tol) {
    Tol inner_tol{tol.rtol, 0.02 * tol.atol};
    auto inner_r = [&](double r1, double r2) -> C {
        return adaptive_gk([&](double R) { return f(r1, r2, R); }, std::abs(r1 - r2), r1 + r2,
                           inner_tol);
    };
    auto over_r2 = [&](double r1) -> C {
        // split at the |r1 - r2| kink
        C low = r1 > 0.0 ? adaptive_gk([&](double r2) { return inner_r(r1, r2); }, 0.0, r1,
                                       inner_tol)
                         : C(0.0);
        C high = exp_sinh([&](double s) { return inner_r(r1, r1 + s); }, c2, inner_tol);
        return low + high;
    };
    return exp_sinh(over_r2, c1, tol);
}

// One cheap pass (coarse trapezoids outside, single Kronrod panel inside)
// to fix the absolute scale for the adaptive tolerances.
template <typename F>
double coarse_scale(const F& f, double c1, double c2) {
    double e;
    Tol loose{1.0, 1e300}; // exp_sinh stops after its second level
    auto inner_r = [&](double r1, double r2) -> C {
        return gk15([&](double R) { return f(r1, r2, R); }, std::abs(r1 - r2), r1 + r2, e);
    };
    auto over_r2 = [&](double r1) -> C {
        C low = r1 > 0.0 ? gk15([&](double r2) { return inner_r(r1, r2); }, 0.0, r1, e)
                         : C(0.0);
        return low + exp_sinh([&](double s) { return inner_r(r1, r1 + s); }, c2, loose);
    };
    return std::abs(exp_sinh(over_r2, c1, loose));
}

template <typename F>
C quad_triangle(const F& f, double c1, double c2, double rtol = 1e-10) {
    const double scale = coarse_scale(f, c1, c2);
    return triangle_domain(f, c1, c2, Tol{rtol, 1e-14 * (scale > 0.0 ? scale : 1e-30)});
}

// Gamma(l,m,n; a,b,g) by pure quadrature.
inline C gamma_quad(int l, int m, int n, C a, C b, C g) {
    auto f = [&](double r1, double r2, double R) -> C {
        return std::pow(r1, l) * std::pow(r2, m) * std::pow(R, n) *
               std::exp(-a * r1 - b * r2 - g * R);
    };
    return quad_triangle(f, a.real(), b.real());
}

// Collapsed one-coordinate integral for delta oracles:
// 4 pi * Int_0^inf r^2 u(r) v(r) dr with real part-products.
template <typename F>
double radial_quad(const F& f, double c) {
    const C v = exp_sinh([&](double r) -> C { return C(f(r), 0.0); }, c, Tol{1e-12, 0.0});
    return v.real();
}

} // namespace oracle
