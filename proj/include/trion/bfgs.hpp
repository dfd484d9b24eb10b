#pragma once

// BFGS with a strong-Wolfe line search.
//
// The line search brackets and zooms with derivative-secant interpolation,
// and additionally refines any acceptable step whose directional derivative
// is not yet small; on quadratics the secant step is the exact minimizer,
// which preserves the classical finite-termination behavior.  Near the
// noise floor of the objective the value-based sufficient-decrease test is
// relaxed to an approximate-Wolfe test on derivatives alone, which lets the
// iteration push the gradient norm to ~1e-10 on smooth problems.
//
// Every objective call (including line-search probes) counts as one
// function evaluation; this counter is what run reports quote.

#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "trion/errors.hpp"

namespace trion {

struct OptimizerConfig {
    double grad_norm_tol = 1e-10;
    long max_evals = 20000;
    double c1 = 1e-4; // sufficient decrease
    double c2 = 0.9;  // curvature

    void validate() const {
        if (!(0.0 < c1 && c1 < c2 && c2 < 1.0))
            throw SizeError("Wolfe constants need 0 < c1 < c2 < 1");
        if (!(grad_norm_tol > 0.0)) throw SizeError("grad_norm_tol must be positive");
    }
};

enum class BfgsStatus { GradConverged, EvalBudget, LineSearchStall };

inline const char* to_string(BfgsStatus s) {
    switch (s) {
    case BfgsStatus::GradConverged: return "converged";
    case BfgsStatus::EvalBudget: return "eval-budget";
    case BfgsStatus::LineSearchStall: return "line-search-stall";
    }
    return "?";
}

struct BfgsResult {
    Eigen::VectorXd x;
    double f = 0.0;
    Eigen::VectorXd grad;
    double grad_norm = 0.0;
    long evals = 0;
    int iterations = 0;
    BfgsStatus status = BfgsStatus::GradConverged;
};

// Objective: returns f(x) and fills grad (same length as x).
using Objective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

inline BfgsResult bfgs_minimize(const Objective& f, const Eigen::VectorXd& x0,
                                const OptimizerConfig& cfg = {}) {
    cfg.validate();
    const int d = static_cast<int>(x0.size());
    BfgsResult res;
    res.x = x0;
    res.grad.resize(d);

    long evals = 0;
    auto eval = [&](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
        ++evals;
        const double v = f(x, g);
        if (!std::isfinite(v) || !g.allFinite())
            throw NumericalError("objective returned a non-finite value or gradient");
        return v;
    };

    res.f = eval(res.x, res.grad);
    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(d, d);
    bool first_update = true;

    Eigen::VectorXd p(d), x_trial(d), g_trial(d), g_best(d);

    for (int iter = 0;; ++iter) {
        res.grad_norm = res.grad.norm();
        res.iterations = iter;
        if (res.grad_norm <= cfg.grad_norm_tol) {
            res.status = BfgsStatus::GradConverged;
            break;
        }
        if (evals >= cfg.max_evals) {
            res.status = BfgsStatus::EvalBudget;
            break;
        }

        p.noalias() = -(H * res.grad);
        double dphi0 = res.grad.dot(p);
        if (dphi0 >= 0.0) { // lost positive definiteness; restart on steepest descent
            H.setIdentity();
            first_update = true;
            p = -res.grad;
            dphi0 = res.grad.dot(p);
        }

        // --- strong Wolfe line search on phi(a) = f(x + a p) ---
        const double f0 = res.f;
        const double noise = 1e-14 * (std::abs(f0) + 1.0);
        double a_prev = 0.0, f_prev = f0, dphi_prev = dphi0;
        double alpha = 1.0;
        double a_lo = -1.0, a_hi = -1.0, f_lo = 0.0, d_lo = 0.0, f_hi = 0.0, d_hi = 0.0;
        bool have_step = false, bracketed = false;
        double a_acc = 0.0, f_acc = 0.0;
        double f_best = f0;
        double a_best = 0.0;
        bool best_valid = false;

        auto probe = [&](double a, double& fv, double& dv) {
            x_trial = res.x + a * p;
            fv = eval(x_trial, g_trial);
            dv = g_trial.dot(p);
            if (fv < f_best) {
                f_best = fv;
                a_best = a;
                g_best = g_trial;
                best_valid = true;
            }
        };

        // armijo, with an approximate-Wolfe fallback once the expected
        // decrease is below the objective's noise
        auto acceptable = [&](double a, double fv, double dv) {
            const bool armijo = fv <= f0 + cfg.c1 * a * dphi0 + noise;
            const bool curvature = std::abs(dv) <= cfg.c2 * std::abs(dphi0);
            if (armijo && curvature) return true;
            const bool tiny = std::abs(a * dphi0) <= noise;
            const bool approx = (2.0 * cfg.c1 - 1.0) * dphi0 >= dv && dv >= cfg.c2 * dphi0 &&
                                fv <= f0 + noise;
            return tiny && approx;
        };

        for (int ls = 0; ls < 30 && evals < cfg.max_evals; ++ls) {
            double fa, da;
            if (!bracketed) {
                probe(alpha, fa, da);
                if (fa > f0 + cfg.c1 * alpha * dphi0 + noise || (ls > 0 && fa >= f_prev)) {
                    a_lo = a_prev; f_lo = f_prev; d_lo = dphi_prev;
                    a_hi = alpha; f_hi = fa; d_hi = da;
                    bracketed = true;
                    continue;
                }
                if (acceptable(alpha, fa, da)) {
                    // refine once with a derivative secant when the step is
                    // far from a stationary point of phi
                    if (std::abs(da) > 1e-3 * std::abs(dphi0) && da != dphi_prev) {
                        const double a_ref =
                            alpha - da * (alpha - a_prev) / (da - dphi_prev);
                        if (std::isfinite(a_ref) && a_ref > 0.0 && a_ref < 10.0 * alpha &&
                            std::abs(a_ref - alpha) > 1e-12 * alpha && evals < cfg.max_evals) {
                            double fr, dr;
                            probe(a_ref, fr, dr);
                            if (fr <= fa) {
                                a_acc = a_ref; f_acc = fr;
                                have_step = true;
                                break;
                            }
                        }
                    }
                    a_acc = alpha; f_acc = fa;
                    have_step = true;
                    break;
                }
                if (da >= 0.0) {
                    a_lo = alpha; f_lo = fa; d_lo = da;
                    a_hi = a_prev; f_hi = f_prev; d_hi = dphi_prev;
                    bracketed = true;
                    continue;
                }
                a_prev = alpha; f_prev = fa; dphi_prev = da;
                alpha *= 2.0;
            } else {
                // zoom: derivative secant inside [a_lo, a_hi], bisection fallback
                double a_mid = a_lo;
                if (d_hi != d_lo) a_mid = a_lo - d_lo * (a_hi - a_lo) / (d_hi - d_lo);
                const double lo = std::min(a_lo, a_hi), hi = std::max(a_lo, a_hi);
                const double span = hi - lo;
                if (!(a_mid > lo + 0.05 * span && a_mid < hi - 0.05 * span))
                    a_mid = 0.5 * (lo + hi);
                if (span < 1e-14 * (1.0 + std::abs(a_lo))) break;
                probe(a_mid, fa, da);
                if (acceptable(a_mid, fa, da)) {
                    a_acc = a_mid; f_acc = fa;
                    have_step = true;
                    break;
                }
                if (fa > f0 + cfg.c1 * a_mid * dphi0 + noise || fa >= f_lo) {
                    a_hi = a_mid; f_hi = fa; d_hi = da;
                } else {
                    if (da * (a_hi - a_lo) >= 0.0) {
                        a_hi = a_lo; f_hi = f_lo; d_hi = d_lo;
                    }
                    a_lo = a_mid; f_lo = fa; d_lo = da;
                }
            }
        }

        if (!have_step) {
            // accept the best probe if it made any progress at all
            if (best_valid && f_best < f0 - noise) {
                a_acc = a_best;
                f_acc = f_best;
                x_trial = res.x + a_acc * p;
                g_trial = g_best;
            } else {
                res.status = evals >= cfg.max_evals ? BfgsStatus::EvalBudget
                                                    : BfgsStatus::LineSearchStall;
                break;
            }
        } else if (a_acc != a_best || f_acc != f_best) {
            // make sure x_trial/g_trial hold the accepted point (the last
            // probe may have been elsewhere)
            x_trial = res.x + a_acc * p;
            f_acc = eval(x_trial, g_trial);
        }

        const Eigen::VectorXd s = x_trial - res.x;
        const Eigen::VectorXd y = g_trial - res.grad;
        const double sy = s.dot(y);
        res.x = x_trial;
        res.f = f_acc;
        res.grad = g_trial;
        if (sy > 1e-12 * s.norm() * y.norm()) {
            if (first_update) {
                H = (sy / y.squaredNorm()) * Eigen::MatrixXd::Identity(d, d);
                first_update = false;
            }
            const double rho = 1.0 / sy;
            const Eigen::VectorXd Hy = H * y;
            const double yHy = y.dot(Hy);
            // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
            H.noalias() -= rho * (s * Hy.transpose());
            H.noalias() -= rho * (Hy * s.transpose());
            H.noalias() += (rho * rho * yHy + rho) * (s * s.transpose());
        }
    }

    res.evals = evals;
    return res;
}

} // namespace trion
