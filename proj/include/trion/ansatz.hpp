#pragma once

// Layered pool ansatz on a real statevector.
//
// Every pool operator P has odd Y weight, so P^2 = I and i*P is a real
// matrix with zero diagonal; the rotation identity
//
//   exp(i theta P) psi = cos(theta) psi + sin(theta) (iP) psi
//
// is exact.  (iP) maps |b> to s(b) |b ^ x> with s(b) = -(+1 for Y-weight
// 3 mod 4) * (-1)^{popcount(b & zy)}, and s(b) s(b^x) = -1, so a rotation
// is a plane rotation on each index pair (b, b^x).
//
// The layered state is
//   |Psi(theta)> = [prod_{m=1..k} prod_{l=1..2n-2} exp(i theta_{m,l} P_l)] |0>
// applied layer 1 first, within a layer in pool order, with independent
// parameters per (layer, slot).
//
// The gradient of E = <psi|H|psi> uses one H application and a reverse
// sweep: with b = H psi,  dE/dtheta_t = 2 <b_t| iP_t |psi_t>, where psi_t
// and b_t are obtained by unwinding rotations t+1..T from psi and b.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "trion/errors.hpp"
#include "trion/mcp.hpp"
#include "trion/pauli.hpp"
#include "trion/rng.hpp"

namespace trion {

struct RotationOp {
    std::uint64_t x_mask = 0;
    std::uint64_t zy_mask = 0;
    double base = 1.0; // Re(i^{y_count+1}); -1 for one Y, +1 for three, ...

    static RotationOp from_pauli(const PauliString& p) {
        const int ny = p.y_count();
        if (ny % 2 == 0)
            throw ContractViolationError("rotation generator '" + p.ops_str() +
                                         "' has even Y weight; exp(i theta P) would leave "
                                         "the real subspace");
        RotationOp op;
        op.x_mask = p.x_mask();
        op.zy_mask = p.zy_mask();
        op.base = (ny % 4 == 1) ? -1.0 : 1.0;
        return op;
    }

    double sign(std::uint64_t b) const {
        return __builtin_popcountll(b & zy_mask) % 2 ? -base : base;
    }
};

// In-place exp(i theta P) on a real state, one pass over the (b, b^x) pairs.
inline void rotate_inplace(Eigen::VectorXd& psi, const RotationOp& op, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    const std::uint64_t x = op.x_mask;
    const std::uint64_t dim = static_cast<std::uint64_t>(psi.size());
    for (std::uint64_t b = 0; b < dim; ++b) {
        const std::uint64_t bp = b ^ x;
        if (bp < b) continue;
        const double sb = op.sign(b); // s(b^x) = -s(b)
        const double vb = psi[b], vp = psi[bp];
        psi[b] = c * vb - s * sb * vp;
        psi[bp] = c * vp + s * sb * vb;
    }
}

inline void apply_i_pauli(const Eigen::VectorXd& in, const RotationOp& op,
                          Eigen::VectorXd& out) {
    const std::uint64_t x = op.x_mask;
    const std::uint64_t dim = static_cast<std::uint64_t>(in.size());
    for (std::uint64_t b = 0; b < dim; ++b) out[b ^ x] = op.sign(b) * in[b];
}

inline Eigen::VectorXd apply_rotation(const Eigen::VectorXd& psi, const PauliString& p,
                                      double theta) {
    Eigen::VectorXd out = psi;
    rotate_inplace(out, RotationOp::from_pauli(p), theta);
    return out;
}

// A flat sequence of rotation generators, one per parameter, in application
// order.  The layered ansatz repeats the pool k times; the adaptive driver
// grows its own sequence.
struct RotationProgram {
    int n = 0;
    std::vector<RotationOp> ops;
    std::vector<PauliString> sources; // generator per slot, for reporting

    int dim() const { return 1 << n; }
    int parameter_count() const { return static_cast<int>(ops.size()); }

    void append(const PauliString& p) {
        ops.push_back(RotationOp::from_pauli(p));
        sources.push_back(p);
    }
};

enum class InitRule { Zeros, Perturb };

struct AnsatzConfig {
    int k = 1;
    McpPool pool;
    InitRule init = InitRule::Zeros;
    double init_scale = 1e-2;
    std::uint64_t init_seed = 0;

    int parameter_count() const { return k * pool.size(); }

    RotationProgram program() const {
        RotationProgram prog;
        prog.n = pool.n;
        prog.ops.reserve(parameter_count());
        for (int layer = 0; layer < k; ++layer)
            for (const auto& p : pool.ops) prog.append(p);
        return prog;
    }

    Eigen::VectorXd initial_parameters() const {
        Eigen::VectorXd theta = Eigen::VectorXd::Zero(parameter_count());
        if (init == InitRule::Perturb) {
            SplitMix64 rng(init_seed, 0x7e7a);
            for (int i = 0; i < theta.size(); ++i)
                theta[i] = rng.next_in(-init_scale, init_scale);
        }
        return theta;
    }
};

inline Eigen::VectorXd reference_state(int n) {
    Eigen::VectorXd psi = Eigen::VectorXd::Zero(1 << n);
    psi[0] = 1.0;
    return psi;
}

inline Eigen::VectorXd run_program(const RotationProgram& prog, const Eigen::VectorXd& theta) {
    if (theta.size() != prog.parameter_count())
        throw SizeError("parameter vector has length " + std::to_string(theta.size()) +
                        ", program needs " + std::to_string(prog.parameter_count()));
    Eigen::VectorXd psi = reference_state(prog.n);
    for (int t = 0; t < prog.parameter_count(); ++t) rotate_inplace(psi, prog.ops[t], theta[t]);
    return psi;
}

inline Eigen::VectorXd prepare_state(const AnsatzConfig& config, const Eigen::VectorXd& theta) {
    return run_program(config.program(), theta);
}

// Scratch vectors reused across objective evaluations.
struct EnergyWorkspace {
    Eigen::VectorXd psi, bra, tmp;

    void resize(int dim) {
        psi.resize(dim);
        bra.resize(dim);
        tmp.resize(dim);
    }
};

// E = psi^T H psi and its analytic gradient; `psi_out` receives the final
// state.  Cost: one dense H apply plus three rotation sweeps.
inline double program_energy_gradient(const RotationProgram& prog, const Eigen::VectorXd& theta,
                                      const Eigen::MatrixXd& H, Eigen::VectorXd& grad,
                                      EnergyWorkspace& ws, Eigen::VectorXd* psi_out = nullptr) {
    const int T = prog.parameter_count();
    if (theta.size() != T) throw SizeError("parameter/program length mismatch");
    if (H.rows() != prog.dim())
        throw SizeError("operator dimension does not match the program's qubit count");
    ws.resize(prog.dim());

    ws.psi = reference_state(prog.n);
    for (int t = 0; t < T; ++t) rotate_inplace(ws.psi, prog.ops[t], theta[t]);
    if (psi_out) *psi_out = ws.psi;

    ws.bra.noalias() = H * ws.psi;
    const double energy = ws.psi.dot(ws.bra);

    grad.resize(T);
    for (int t = T - 1; t >= 0; --t) {
        apply_i_pauli(ws.psi, prog.ops[t], ws.tmp);
        grad[t] = 2.0 * ws.bra.dot(ws.tmp);
        rotate_inplace(ws.psi, prog.ops[t], -theta[t]);
        rotate_inplace(ws.bra, prog.ops[t], -theta[t]);
    }
    return energy;
}

inline double program_energy(const RotationProgram& prog, const Eigen::VectorXd& theta,
                             const Eigen::MatrixXd& H, EnergyWorkspace& ws) {
    ws.resize(prog.dim());
    ws.psi = reference_state(prog.n);
    for (int t = 0; t < prog.parameter_count(); ++t)
        rotate_inplace(ws.psi, prog.ops[t], theta[t]);
    ws.bra.noalias() = H * ws.psi;
    return ws.psi.dot(ws.bra);
}

// Spec'd convenience form with evaluation counters.
struct AnsatzState {
    Eigen::VectorXd theta;
    Eigen::VectorXd psi;
    long eval_count = 0;
    long grad_count = 0;
};

inline double energy_and_gradient(const AnsatzConfig& config, const Eigen::VectorXd& theta,
                                  const Eigen::MatrixXd& Hp, Eigen::VectorXd& grad,
                                  AnsatzState* state = nullptr) {
    EnergyWorkspace ws;
    Eigen::VectorXd psi;
    const double e = program_energy_gradient(config.program(), theta, Hp, grad, ws, &psi);
    if (state) {
        state->theta = theta;
        state->psi = psi;
        ++state->eval_count;
        ++state->grad_count;
    }
    return e;
}

} // namespace trion
