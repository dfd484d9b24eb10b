#pragma once

// Conversion of the generalized eigenproblem  H c = E O c  to standard form
// via canonical orthogonalization: eigendecompose O = D diag(lambda) D^T,
// form U = D diag(lambda^{-1/2}) (columns ordered by descending lambda),
// so that U^T O U = I, and diagonalize Hp = U^T H U.  A symmetric-Lowdin
// variant (U = D diag(lambda^{-1/2}) D^T) is available behind a flag.
//
// The same construction is provided in double-double arithmetic (Jacobi
// eigensolver) for bases whose overlap matrix is too ill-conditioned for a
// double-precision build; results are rounded to double at the end, at
// which point all stored digits are significant.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trion/errors.hpp"
#include "trion/matrices.hpp"

namespace trion {

enum class OrthoMode { Canonical, Symmetric };

struct OrthoOptions {
    OrthoMode mode = OrthoMode::Canonical;
    double eigenvalue_floor = 1e-12; // relative to lambda_max; hard failure below
};

struct OrthoResult {
    Eigen::MatrixXd U;      // N x N transform, U^T O U = I
    Eigen::VectorXd lambda; // overlap eigenvalues, descending
    Eigen::MatrixXd Hp;     // U^T H U
    double condition = 0.0; // lambda_max / lambda_min
    // max-abs of U^T O U - I, measured in the arithmetic of the build
    // (double here, double-double in the extended path).
    double residual = 0.0;
};

namespace detail {

// Stable descending order; ties keep the input order so exactly-diagonal
// inputs map to themselves.
inline std::vector<int> descending_order(const Eigen::VectorXd& v) {
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
    return idx;
}

// Deterministic column signs: the largest-magnitude entry is made positive.
inline void fix_column_signs(Eigen::MatrixXd& m) {
    for (int j = 0; j < m.cols(); ++j) {
        int imax = 0;
        m.col(j).cwiseAbs().maxCoeff(&imax);
        if (m(imax, j) < 0.0) m.col(j) = -m.col(j);
    }
}

inline void check_floor(const Eigen::VectorXd& lambda_desc, double floor_rel) {
    const double lmax = lambda_desc[0];
    if (!(lmax > 0.0))
        throw NearSingularOverlapError("overlap matrix has no positive eigenvalues",
                                       static_cast<int>(lambda_desc.size()));
    int bad = 0;
    for (int i = 0; i < lambda_desc.size(); ++i)
        if (!(lambda_desc[i] > floor_rel * lmax)) ++bad;
    if (bad > 0)
        throw NearSingularOverlapError(
            std::to_string(bad) + " overlap eigenvalue(s) at or below " +
                std::to_string(floor_rel) + " * lambda_max; basis is numerically dependent -- "
                "try a different seed",
            bad);
}

} // namespace detail

inline OrthoResult canonical_orthogonalize(const Eigen::MatrixXd& H, const Eigen::MatrixXd& O,
                                           const OrthoOptions& opts = {}) {
    const int n = static_cast<int>(O.rows());
    if (n < 1 || O.cols() != n || H.rows() != n || H.cols() != n)
        throw SizeError("canonical_orthogonalize: H and O must be square and equal-sized");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(O);
    if (es.info() != Eigen::Success)
        throw NumericalError("overlap eigendecomposition failed");

    const auto order = detail::descending_order(es.eigenvalues());
    Eigen::VectorXd lambda(n);
    Eigen::MatrixXd D(n, n);
    for (int k = 0; k < n; ++k) {
        lambda[k] = es.eigenvalues()[order[k]];
        D.col(k) = es.eigenvectors().col(order[k]);
    }
    detail::fix_column_signs(D);
    detail::check_floor(lambda, opts.eigenvalue_floor);

    OrthoResult r;
    r.lambda = lambda;
    const Eigen::VectorXd scale = lambda.cwiseSqrt().cwiseInverse();
    if (opts.mode == OrthoMode::Canonical)
        r.U = D * scale.asDiagonal();
    else
        r.U = D * scale.asDiagonal() * D.transpose();
    r.Hp = r.U.transpose() * H * r.U;
    r.Hp = 0.5 * (r.Hp + r.Hp.transpose()).eval();
    r.condition = lambda[0] / lambda[n - 1];
    r.residual = (r.U.transpose() * O * r.U - Eigen::MatrixXd::Identity(n, n))
                     .cwiseAbs()
                     .maxCoeff();
    return r;
}

inline Eigen::MatrixXd transform_operator(const OrthoResult& ortho, const Eigen::MatrixXd& D) {
    Eigen::MatrixXd Dp = ortho.U.transpose() * D * ortho.U;
    return 0.5 * (Dp + Dp.transpose());
}

// --- extended-precision path ---------------------------------------------

namespace detail {

// Cyclic Jacobi for symmetric double-double matrices.  Returns eigenvalues
// and accumulated rotations (columns of V are eigenvectors), unordered.
inline void jacobi_dd(SquareMatrix<DoubleDouble> A, std::vector<DoubleDouble>& eig,
                      SquareMatrix<DoubleDouble>& V) {
    const int n = A.size();
    V = SquareMatrix<DoubleDouble>::identity(n);
    const DoubleDouble zero(0.0), one(1.0);

    DoubleDouble norm(0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) norm += A(i, j) * A(i, j);
    norm = trion::sqrt(norm);
    const double stop = 1e-30 * to_double(norm);

    for (int sweep = 0; sweep < 60; ++sweep) {
        DoubleDouble off(0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
        if (to_double(trion::sqrt(off)) <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const DoubleDouble apq = A(p, q);
                if (to_double(abs(apq)) == 0.0) continue;
                const DoubleDouble tau = (A(q, q) - A(p, p)) / (apq + apq);
                const double tau_d = to_double(tau);
                DoubleDouble t;
                if (!(std::abs(tau_d) < 1e10)) {
                    // tiny rotation; double precision is plenty and tau^2
                    // would overflow
                    t = DoubleDouble(std::isfinite(tau_d) ? 1.0 / (2.0 * tau_d) : 0.0);
                } else {
                    t = one / (abs(tau) + trion::sqrt(one + tau * tau));
                    if (tau_d < 0.0) t = -t;
                }
                const DoubleDouble c = one / trion::sqrt(one + t * t);
                const DoubleDouble s = t * c;

                const DoubleDouble app = A(p, p), aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = zero;
                A(q, p) = zero;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const DoubleDouble akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(p, k) = A(k, p);
                    A(k, q) = s * akp + c * akq;
                    A(q, k) = A(k, q);
                }
                for (int k = 0; k < n; ++k) {
                    const DoubleDouble vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    eig.resize(n);
    for (int i = 0; i < n; ++i) eig[i] = A(i, i);
}

} // namespace detail

struct ExtendedOrtho {
    OrthoResult rounded;        // double-precision view of the transform
    SquareMatrix<DoubleDouble> U; // kept for transforming further operators
};

inline ExtendedOrtho canonical_orthogonalize_extended(const SquareMatrix<DoubleDouble>& H,
                                                      const SquareMatrix<DoubleDouble>& O,
                                                      const OrthoOptions& opts = {}) {
    const int n = O.size();
    if (n < 1 || H.size() != n)
        throw SizeError("canonical_orthogonalize_extended: size mismatch");

    std::vector<DoubleDouble> eig;
    SquareMatrix<DoubleDouble> D;
    detail::jacobi_dd(O, eig, D);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return eig[b] < eig[a]; });

    Eigen::VectorXd lambda(n);
    SquareMatrix<DoubleDouble> Dsorted(n);
    std::vector<DoubleDouble> lam(n);
    for (int k = 0; k < n; ++k) {
        lam[k] = eig[order[k]];
        lambda[k] = to_double(lam[k]);
        for (int i = 0; i < n; ++i) Dsorted(i, k) = D(i, order[k]);
    }
    for (int k = 0; k < n; ++k) { // deterministic column signs
        int imax = 0;
        double best = 0.0;
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(to_double(Dsorted(i, k)));
            if (a > best) {
                best = a;
                imax = i;
            }
        }
        if (to_double(Dsorted(imax, k)) < 0.0)
            for (int i = 0; i < n; ++i) Dsorted(i, k) = -Dsorted(i, k);
    }
    detail::check_floor(lambda, opts.eigenvalue_floor);

    ExtendedOrtho out;
    out.U = SquareMatrix<DoubleDouble>(n);
    if (opts.mode == OrthoMode::Canonical) {
        for (int k = 0; k < n; ++k) {
            const DoubleDouble s = DoubleDouble(1.0) / trion::sqrt(lam[k]);
            for (int i = 0; i < n; ++i) out.U(i, k) = Dsorted(i, k) * s;
        }
    } else {
        SquareMatrix<DoubleDouble> scaled(n);
        for (int k = 0; k < n; ++k) {
            const DoubleDouble s = DoubleDouble(1.0) / trion::sqrt(lam[k]);
            for (int i = 0; i < n; ++i) scaled(i, k) = Dsorted(i, k) * s;
        }
        out.U = multiply(scaled, transpose(Dsorted));
    }

    const SquareMatrix<DoubleDouble> Ut = transpose(out.U);
    const SquareMatrix<DoubleDouble> Hp = multiply(Ut, multiply(H, out.U));
    const SquareMatrix<DoubleDouble> OU = multiply(Ut, multiply(O, out.U));

    OrthoResult& r = out.rounded;
    r.lambda = lambda;
    r.U = to_eigen(out.U);
    r.Hp = Eigen::MatrixXd(n, n);
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            r.Hp(i, j) = 0.5 * (to_double(Hp(i, j)) + to_double(Hp(j, i)));
            const double target = (i == j) ? 1.0 : 0.0;
            resid = std::max(resid, std::abs(to_double(OU(i, j)) - target));
        }
    }
    r.condition = lambda[0] / lambda[n - 1];
    r.residual = resid;
    return out;
}

inline Eigen::MatrixXd transform_operator_extended(const SquareMatrix<DoubleDouble>& U,
                                                   const SquareMatrix<DoubleDouble>& D) {
    const auto Dp = multiply(transpose(U), multiply(D, U));
    Eigen::MatrixXd out(D.size(), D.size());
    for (int i = 0; i < D.size(); ++i)
        for (int j = 0; j < D.size(); ++j)
            out(i, j) = 0.5 * (to_double(Dp(i, j)) + to_double(Dp(j, i)));
    return out;
}

// --- ground state ---------------------------------------------------------

struct GroundSolution {
    double energy = 0.0;
    Eigen::VectorXd vector; // unit vector in the orthonormal basis
    std::optional<Eigen::VectorXd> full_spectrum;
};

inline GroundSolution solve_ground(const Eigen::MatrixXd& Hp, bool keep_spectrum = false) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Hp);
    if (es.info() != Eigen::Success) throw NumericalError("eigendecomposition of Hp failed");
    GroundSolution g;
    g.energy = es.eigenvalues()[0];
    g.vector = es.eigenvectors().col(0);
    int imax = 0;
    g.vector.cwiseAbs().maxCoeff(&imax);
    if (g.vector[imax] < 0.0) g.vector = -g.vector;
    if (keep_spectrum) g.full_spectrum = es.eigenvalues();
    return g;
}

// c'^T Dp c', accumulated as 2 sum_{i>j} + diagonal.
inline double classical_delta(const GroundSolution& sol, const Eigen::MatrixXd& Dp) {
    const int n = static_cast<int>(sol.vector.size());
    if (Dp.rows() != n || Dp.cols() != n)
        throw SizeError("classical_delta: dimension mismatch");
    double off = 0.0, diag = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) off += sol.vector[i] * sol.vector[j] * Dp(i, j);
        diag += sol.vector[i] * sol.vector[i] * Dp(i, i);
    }
    return 2.0 * off + diag;
}

} // namespace trion
