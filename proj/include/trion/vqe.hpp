#pragma once

// VQE drivers: the fixed layered ansatz, the adaptive pool-gradient
// baseline, fidelity tracking, and observable evaluation on converged
// states.

#include <chrono>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trion/ansatz.hpp"
#include "trion/bfgs.hpp"
#include "trion/encoding.hpp"
#include "trion/mcp.hpp"
#include "trion/spectra.hpp"

namespace trion {

inline double fidelity(const Eigen::VectorXd& psi, const GroundSolution& ground) {
    if (psi.size() != ground.vector.size())
        throw SizeError("fidelity: state dimensions differ");
    return std::abs(psi.dot(ground.vector));
}

inline double observable_expectation(const Eigen::VectorXd& psi, const EncodedOperator& op) {
    if (psi.size() != op.matrix.rows())
        throw SizeError("observable_expectation: dimension mismatch");
    return psi.dot(op.matrix * psi);
}

struct RunRecord {
    long eval = 0;
    double energy = 0.0;
    double err_diag = 0.0;  // energy - lowest eigenvalue of Hp
    double err_exact = 0.0; // energy - embedded exact reference (NaN if none)
    double fidelity = 0.0;
    double grad_norm = 0.0;
    double elapsed_s = 0.0;
};

struct RunTrace {
    std::vector<RunRecord> records;
    double final_energy = 0.0;
    double final_err_diag = 0.0;
    double final_err_exact = std::numeric_limits<double>::quiet_NaN();
    double final_fidelity = 0.0;
    double final_grad_norm = 0.0;
    double diag_energy = 0.0; // lowest eigenvalue of Hp
    long total_evals = 0;
    int parameter_count = 0;
    long cnot_total = 0;
    std::string status;
    bool truncated = false;
    double wall_seconds = 0.0;
    Eigen::VectorXd theta_final;
    Eigen::VectorXd psi_final;
};

namespace detail {

class TraceRecorder {
  public:
    TraceRecorder(RunTrace& trace, const GroundSolution& ground, double exact_ref)
        : trace_(trace), ground_(ground), exact_(exact_ref),
          start_(std::chrono::steady_clock::now()) {}

    void record(double energy, const Eigen::VectorXd& psi, double grad_norm) {
        RunRecord r;
        r.eval = static_cast<long>(trace_.records.size()) + 1;
        r.energy = energy;
        r.err_diag = energy - ground_.energy;
        r.err_exact = energy - exact_;
        r.fidelity = fidelity(psi, ground_);
        r.grad_norm = grad_norm;
        r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                          .count();
        trace_.records.push_back(r);
    }

  private:
    RunTrace& trace_;
    const GroundSolution& ground_;
    double exact_;
    std::chrono::steady_clock::time_point start_;
};

inline void finish_trace(RunTrace& trace, const GroundSolution& ground) {
    trace.diag_energy = ground.energy;
    if (!trace.records.empty()) {
        const auto& last = trace.records.back();
        trace.final_energy = last.energy;
        trace.final_err_diag = last.err_diag;
        trace.final_err_exact = last.err_exact;
        trace.final_fidelity = last.fidelity;
        trace.final_grad_norm = last.grad_norm;
        trace.wall_seconds = last.elapsed_s;
    }
    trace.total_evals = static_cast<long>(trace.records.size());
}

} // namespace detail

inline RunTrace run_ni_ducc(const EncodedOperator& Hp, const AnsatzConfig& config,
                            const OptimizerConfig& cfg,
                            double exact_ref = std::numeric_limits<double>::quiet_NaN()) {
    const RotationProgram prog = config.program();
    if (Hp.matrix.rows() != prog.dim())
        throw SizeError("run_ni_ducc: operator and ansatz dimensions differ");
    const GroundSolution ground = solve_ground(Hp.matrix);

    RunTrace trace;
    trace.parameter_count = prog.parameter_count();
    trace.cnot_total = cnot_cost(config.pool, config.k);
    detail::TraceRecorder rec(trace, ground, exact_ref);

    EnergyWorkspace ws;
    Eigen::VectorXd psi;
    Objective objective = [&](const Eigen::VectorXd& theta, Eigen::VectorXd& grad) {
        const double e = program_energy_gradient(prog, theta, Hp.matrix, grad, ws, &psi);
        rec.record(e, psi, grad.norm());
        return e;
    };

    BfgsResult opt = bfgs_minimize(objective, config.initial_parameters(), cfg);
    trace.status = to_string(opt.status);
    trace.theta_final = opt.x;
    trace.psi_final = run_program(prog, opt.x);
    // the trace keeps every probe; summarize at the optimizer's final point
    detail::finish_trace(trace, ground);
    trace.final_energy = opt.f;
    trace.final_err_diag = opt.f - ground.energy;
    trace.final_err_exact = opt.f - exact_ref;
    trace.final_grad_norm = opt.grad_norm;
    trace.final_fidelity = fidelity(trace.psi_final, ground);
    return trace;
}

// Pool gradients g_j = |<psi|[H, iP_j]|psi>| = |2 (H psi) . (iP_j psi)|
// and their Euclidean norm.
struct AdaptGradients {
    Eigen::VectorXd g;
    double norm = 0.0;
};

inline AdaptGradients adapt_gradients(const Eigen::VectorXd& psi, const Eigen::MatrixXd& Hp,
                                      const McpPool& pool) {
    AdaptGradients out;
    out.g.resize(pool.size());
    const Eigen::VectorXd hpsi = Hp * psi;
    Eigen::VectorXd tmp(psi.size());
    for (int j = 0; j < pool.size(); ++j) {
        apply_i_pauli(psi, RotationOp::from_pauli(pool.ops[j]), tmp);
        out.g[j] = std::abs(2.0 * hpsi.dot(tmp));
    }
    out.norm = out.g.norm();
    return out;
}

struct AdaptConfig {
    double epsilon = 1e-3;
    int max_operators = 500;
    OptimizerConfig inner;

    void validate() const {
        if (!(epsilon > 0.0)) throw SizeError("adapt epsilon must be positive");
        inner.validate();
    }
};

struct AdaptIteration {
    int index = 0;          // 0-based outer iteration
    std::string op;         // operator chosen this iteration ("" on the final check)
    double g_norm = 0.0;    // pool-gradient norm before extending
    double energy = 0.0;    // energy at the start of the iteration
    double err_diag = 0.0;
    long cumulative_evals = 0;
};

struct AdaptTrace {
    RunTrace trace;
    std::vector<AdaptIteration> iterations;
    int operators_selected = 0;
};

// Grows the ansatz one pool operator at a time (largest g_j, ties to the
// lowest index), warm-starting all previous parameters and re-optimizing
// everything with BFGS after each extension.
inline AdaptTrace run_adapt(const EncodedOperator& Hp, const McpPool& pool,
                            const AdaptConfig& cfg,
                            double exact_ref = std::numeric_limits<double>::quiet_NaN()) {
    cfg.validate();
    pool.validate();
    if (Hp.matrix.rows() != (1 << pool.n))
        throw SizeError("run_adapt: operator and pool dimensions differ");
    const GroundSolution ground = solve_ground(Hp.matrix);

    AdaptTrace out;
    RunTrace& trace = out.trace;
    detail::TraceRecorder rec(trace, ground, exact_ref);

    RotationProgram prog;
    prog.n = pool.n;
    Eigen::VectorXd theta(0);
    Eigen::VectorXd psi = reference_state(pool.n);
    double energy = psi.dot(Hp.matrix * psi);
    trace.status = "converged";

    EnergyWorkspace ws;
    for (int outer = 0;; ++outer) {
        const AdaptGradients g = adapt_gradients(psi, Hp.matrix, pool);

        AdaptIteration it;
        it.index = outer;
        it.g_norm = g.norm;
        it.energy = energy;
        it.err_diag = energy - ground.energy;
        it.cumulative_evals = static_cast<long>(trace.records.size());

        if (g.norm < cfg.epsilon) {
            out.iterations.push_back(it);
            break;
        }
        if (out.operators_selected >= cfg.max_operators) {
            trace.truncated = true;
            trace.status = "max-operators";
            out.iterations.push_back(it);
            break;
        }

        int best = 0;
        for (int j = 1; j < pool.size(); ++j)
            if (g.g[j] > g.g[best]) best = j; // strict: ties keep the lowest index
        it.op = pool.ops[best].ops_str();
        out.iterations.push_back(it);

        prog.append(pool.ops[best]);
        ++out.operators_selected;
        Eigen::VectorXd theta_next(prog.parameter_count());
        theta_next.head(theta.size()) = theta;
        theta_next[prog.parameter_count() - 1] = 0.0;

        Eigen::VectorXd psi_eval;
        Objective objective = [&](const Eigen::VectorXd& th, Eigen::VectorXd& grad) {
            const double e = program_energy_gradient(prog, th, Hp.matrix, grad, ws, &psi_eval);
            rec.record(e, psi_eval, grad.norm());
            return e;
        };
        BfgsResult opt = bfgs_minimize(objective, theta_next, cfg.inner);
        theta = opt.x;
        psi = run_program(prog, theta);
        energy = opt.f;
        if (opt.status == BfgsStatus::EvalBudget) trace.status = "eval-budget";
    }

    trace.parameter_count = prog.parameter_count();
    long cnots = 0;
    for (const auto& p : prog.sources) cnots += cnot_cost(p);
    trace.cnot_total = cnots;
    trace.theta_final = theta;
    trace.psi_final = psi;
    detail::finish_trace(trace, ground);
    trace.final_energy = energy;
    trace.final_err_diag = energy - ground.energy;
    trace.final_err_exact = energy - exact_ref;
    trace.final_fidelity = fidelity(psi, ground);
    if (!out.iterations.empty()) trace.final_grad_norm = out.iterations.back().g_norm;
    return out;
}

} // namespace trion
