#pragma once

// Matrix elements between correlated exponential basis functions: overlap,
// Hamiltonian (kinetic in the gradient form + Coulomb), and delta-function
// elements, all expressed through Gamma(l,m,n).
//
// A basis function is Re or Im of u = exp(-w . x) with w = (a, b, g) and
// x = (r1, r2, R).  Products of parts reduce to two holomorphic kernel
// evaluations, one at w_i + w_j and one at conj(w_i) + w_j:
//
//   Re u Re v =  1/2 Re(uv) + 1/2 Re(conj(u) v)
//   Im u Im v = -1/2 Re(uv) + 1/2 Re(conj(u) v)
//   Re u Im v =  1/2 Im(uv) + 1/2 Im(conj(u) v)
//   Im u Re v =  1/2 Im(uv) - 1/2 Im(conj(u) v)
//
// Kinetic elements use the integration-by-parts form with
//   Grad_1 u = (-a rhat1 + g Rhat) u,   Grad_2 u = (-b rhat2 - g Rhat) u,
// and the angular factors reduce to rational weights which, together with
// the volume weight r1 r2 R, map every term onto Gamma(l,m,n):
//   rhat1 . Rhat   -> (r2^2 - r1^2 - R^2) / (2 r1 R)
//   rhat2 . Rhat   -> (r2^2 - r1^2 + R^2) / (2 r2 R)
//   rhat1 . rhat2  -> (r1^2 + r2^2 - R^2) / (2 r1 r2)
// The 8 pi^2 factor converts the radial triangle-domain integral into the
// full 6-D volume integral for S states.
//
// Delta elements collapse one radial coordinate: for delta(r1), R -> r2 and
// the pure-exponential pair integrates to 8 pi / (B + G)^3 where B, G are
// the beta and gamma components of the combined exponents.

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "trion/basis.hpp"
#include "trion/gamma.hpp"
#include "trion/matrices.hpp"
#include "trion/system.hpp"

namespace trion {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

enum class DeltaCenter { R1, R2 };

namespace detail {

template <typename R>
struct Triple {
    Cx<R> a, b, g;
};

template <typename R>
Triple<R> lift(const BasisFunction& f) {
    return {Cx<R>(R(f.alpha.real()), R(f.alpha.imag())),
            Cx<R>(R(f.beta.real()), R(f.beta.imag())),
            Cx<R>(R(f.gamma.real()), R(f.gamma.imag()))};
}

template <typename R>
Triple<R> conj(const Triple<R>& t) {
    return {trion::conj(t.a), trion::conj(t.b), trion::conj(t.g)};
}

// The complex-valued kernels for one ordered pair of exponent triples.
template <typename R>
struct PairKernels {
    Cx<R> ovl;            // <u v>  with weight r1 r2 R
    Cx<R> kin11;          // <Grad_1 u . Grad_1 v>
    Cx<R> kin22;          // <Grad_2 u . Grad_2 v>
    Cx<R> kin12;          // 1/2 (<Grad_1 u . Grad_2 v> + <Grad_2 u . Grad_1 v>)
    Cx<R> pot12;          // <u v / r1>
    Cx<R> pot13;          // <u v / r2>
    Cx<R> pot23;          // <u v / R>
    Cx<R> delta1, delta2; // collapsed integrals, 8 pi included
};

template <typename R>
PairKernels<R> pair_kernels(const Triple<R>& wu, const Triple<R>& wv) {
    const R half(0.5);
    GammaEvaluator<R> G(wu.a + wv.a, wu.b + wv.b, wu.g + wv.g);

    PairKernels<R> k;
    const Cx<R> g111 = G.value(1, 1, 1);
    k.ovl = g111;
    k.pot12 = G.value(0, 1, 1);
    k.pot13 = G.value(1, 0, 1);
    k.pot23 = G.value(1, 1, 0);

    // angular factors with the volume weight folded in
    const Cx<R> c12 = half * (G.value(2, 0, 1) + G.value(0, 2, 1) - G.value(0, 0, 3));
    const Cx<R> c1r = half * (G.value(0, 3, 0) - G.value(2, 1, 0) - G.value(0, 1, 2));
    const Cx<R> c2r = half * (G.value(1, 2, 0) - G.value(3, 0, 0) + G.value(1, 0, 2));

    const Cx<R>&au = wu.a, &bu = wu.b, &gu = wu.g;
    const Cx<R>&av = wv.a, &bv = wv.b, &gv = wv.g;

    k.kin11 = (au * av + gu * gv) * g111 - (au * gv + av * gu) * c1r;
    k.kin22 = (bu * bv + gu * gv) * g111 + (bu * gv + bv * gu) * c2r;
    k.kin12 = half * (au * bv + av * bu) * c12 + half * (au * gv + av * gu) * c1r -
              half * (bu * gv + bv * gu) * c2r - gu * gv * g111;

    const Cx<R> den1 = wu.b + wv.b + wu.g + wv.g; // delta(r1): B + G
    const Cx<R> den2 = wu.a + wv.a + wu.g + wv.g; // delta(r2): A + G
    auto collapsed = [](const Cx<R>& d) {
        if (!(to_double(d.re) > 0.0))
            throw DivergentIntegralError("delta element: collapsed pair sum has non-positive "
                                         "real part");
        const Cx<R> inv = inverse(d);
        return R(8.0 * kPi) * (inv * inv * inv);
    };
    k.delta1 = collapsed(den1);
    k.delta2 = collapsed(den2);
    return k;
}

// Real-valued kernels after the Re/Im part combination.
template <typename R>
struct RealKernels {
    R ovl{}, kin11{}, kin22{}, kin12{};
    R pot12{}, pot13{}, pot23{};
    R delta1{}, delta2{};
};

template <typename R>
R combine(Part pi, Part pj, const Cx<R>& direct, const Cx<R>& conjugated) {
    const R half(0.5);
    if (pi == Part::Re && pj == Part::Re) return half * direct.re + half * conjugated.re;
    if (pi == Part::Im && pj == Part::Im) return half * conjugated.re - half * direct.re;
    if (pi == Part::Re && pj == Part::Im) return half * direct.im + half * conjugated.im;
    return half * direct.im - half * conjugated.im; // Im, Re
}

template <typename R>
void accumulate(RealKernels<R>& acc, R sign, Part pi, Part pj, const Triple<R>& wi,
                const Triple<R>& wj) {
    const PairKernels<R> dir = pair_kernels(wi, wj);
    const PairKernels<R> con = pair_kernels(conj(wi), wj);
    acc.ovl += sign * combine(pi, pj, dir.ovl, con.ovl);
    acc.kin11 += sign * combine(pi, pj, dir.kin11, con.kin11);
    acc.kin22 += sign * combine(pi, pj, dir.kin22, con.kin22);
    acc.kin12 += sign * combine(pi, pj, dir.kin12, con.kin12);
    acc.pot12 += sign * combine(pi, pj, dir.pot12, con.pot12);
    acc.pot13 += sign * combine(pi, pj, dir.pot13, con.pot13);
    acc.pot23 += sign * combine(pi, pj, dir.pot23, con.pot23);
    acc.delta1 += sign * combine(pi, pj, dir.delta1, con.delta1);
    acc.delta2 += sign * combine(pi, pj, dir.delta2, con.delta2);
}

// Full element kernels including symmetrization images (exchange applied to
// i, to j, and to both, weighted by the symmetry sign).
template <typename R>
RealKernels<R> element_kernels(const BasisFunction& fi, const BasisFunction& fj) {
    RealKernels<R> acc;
    const Triple<R> wi = lift<R>(fi), wj = lift<R>(fj);
    accumulate(acc, R(1.0), fi.part, fj.part, wi, wj);
    if (fi.symmetrized || fj.symmetrized) {
        const Triple<R> xi{wi.b, wi.a, wi.g}; // exchange swaps a and b
        const Triple<R> xj{wj.b, wj.a, wj.g};
        const R si(static_cast<double>(fi.sym_sign));
        const R sj(static_cast<double>(fj.sym_sign));
        accumulate(acc, sj, fi.part, fj.part, wi, xj);
        accumulate(acc, si, fi.part, fj.part, xi, wj);
        accumulate(acc, si * sj, fi.part, fj.part, xi, xj);
    }
    return acc;
}

} // namespace detail

inline constexpr double kVolumeFactor = 8.0 * kPi * kPi;

inline double overlap_element(const BasisFunction& fi, const BasisFunction& fj) {
    return kVolumeFactor * detail::element_kernels<double>(fi, fj).ovl;
}

template <typename R>
R hamiltonian_from_kernels(const detail::RealKernels<R>& k, const KineticCoefficients& c) {
    return R(kVolumeFactor) *
           (R(c.inv_2m12) * k.kin11 + R(c.inv_2m13) * k.kin22 + R(c.inv_m1) * k.kin12 +
            R(c.zz12) * k.pot12 + R(c.zz13) * k.pot13 + R(c.zz23) * k.pot23);
}

inline double hamiltonian_element(const BasisFunction& fi, const BasisFunction& fj,
                                  const KineticCoefficients& c) {
    return hamiltonian_from_kernels(detail::element_kernels<double>(fi, fj), c);
}

inline double delta_element(const BasisFunction& fi, const BasisFunction& fj,
                            DeltaCenter which) {
    const auto k = detail::element_kernels<double>(fi, fj);
    return which == DeltaCenter::R1 ? k.delta1 : k.delta2;
}

template <typename R>
struct MatricesT {
    SquareMatrix<R> H, O, D1, D2;
};

// Assembles all four matrices in one pass over the (i, j) upper triangle;
// the lower triangle is mirrored, so the outputs are exactly symmetric.
template <typename R>
MatricesT<R> build_matrices_impl(const BasisSet& basis, const ThreeBodySystem& system) {
    const KineticCoefficients c = kinetic_coefficients(system);
    const int n = basis.size();
    MatricesT<R> m{SquareMatrix<R>(n), SquareMatrix<R>(n), SquareMatrix<R>(n),
                   SquareMatrix<R>(n)};
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            try {
                const auto k = detail::element_kernels<R>(basis.functions[i], basis.functions[j]);
                m.O(i, j) = m.O(j, i) = R(kVolumeFactor) * k.ovl;
                m.H(i, j) = m.H(j, i) = hamiltonian_from_kernels(k, c);
                m.D1(i, j) = m.D1(j, i) = k.delta1;
                m.D2(i, j) = m.D2(j, i) = k.delta2;
            } catch (const Error& e) {
                throw DivergentIntegralError("element (" + std::to_string(i) + "," +
                                             std::to_string(j) + "): " + e.what());
            }
        }
    }
    return m;
}

struct Matrices {
    Eigen::MatrixXd H, O, D1, D2;
};

inline Matrices build_matrices(const BasisSet& basis, const ThreeBodySystem& system) {
    auto m = build_matrices_impl<double>(basis, system);
    return {to_eigen(m.H), to_eigen(m.O), to_eigen(m.D1), to_eigen(m.D2)};
}

// Double-double assembly for ill-conditioned bases.
inline MatricesT<DoubleDouble> build_matrices_extended(const BasisSet& basis,
                                                       const ThreeBodySystem& system) {
    return build_matrices_impl<DoubleDouble>(basis, system);
}

} // namespace trion
