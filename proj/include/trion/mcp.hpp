#pragma once

// Minimal complete pools: 2n-2 Pauli strings whose i-multiples generate a
// Lie algebra able to rotate real n-qubit states.
//
// The primary construction is the recursion
//
//   {V}_n = { Z_n {V}_{n-1},  iY_n,  iY_{n-1} },    {V}_2 = { iY_2, iY_1 },
//
// where Z_n prefixes a Z on the new top qubit onto every string of the
// previous pool.  Taken literally, this base case generates a commuting
// pair and the closure cannot reach every real state (its orbit rank is
// measured by lie_closure_rank below and reported rather than hidden).
// Two equally sized variants that do reach full rank are provided:
//
//   zbase:  the same recursion started from { iY_2, iZ_2 Y_1 }
//   local:  { iZ_{k+1} Y_k : k = 1..n-1 } + { iY_k : k = 2..n }
//
// All variants have exactly one Y per string, so every operator squares to
// the identity and i*P is real antisymmetric.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trion/errors.hpp"
#include "trion/pauli.hpp"

namespace trion {

enum class PoolVariant { Recursive, RecursiveZBase, Local };

inline const char* to_string(PoolVariant v) {
    switch (v) {
    case PoolVariant::Recursive: return "recursive";
    case PoolVariant::RecursiveZBase: return "zbase";
    case PoolVariant::Local: return "local";
    }
    return "?";
}

inline PoolVariant pool_variant_from_string(const std::string& s) {
    if (s == "recursive") return PoolVariant::Recursive;
    if (s == "zbase") return PoolVariant::RecursiveZBase;
    if (s == "local") return PoolVariant::Local;
    throw LookupError("unknown pool variant '" + s + "' (valid: recursive, zbase, local)");
}

struct McpPool {
    int n = 0;
    std::vector<PauliString> ops;

    int size() const { return static_cast<int>(ops.size()); }

    void validate() const {
        for (const auto& p : ops) {
            if (p.n_qubits() != n)
                throw SizeError("pool operator '" + p.str() + "' has wrong qubit count");
            if (p.y_count() % 2 == 0)
                throw ContractViolationError("pool operator '" + p.ops_str() +
                                             "' has even Y weight; i*P is not real");
        }
    }
};

namespace detail {

inline std::vector<PauliString> mcp_recursion(int n, bool z_conditioned_base) {
    // base on qubits 1..2, embedded in n-qubit strings
    std::vector<PauliString> pool;
    pool.push_back(single_op(n, 1, PauliOp::Y)); // iY_2
    if (z_conditioned_base) {
        PauliString zy(n); // iZ_2 Y_1
        zy.set_op(1, PauliOp::Z);
        zy.set_op(0, PauliOp::Y);
        pool.push_back(zy);
    } else {
        pool.push_back(single_op(n, 0, PauliOp::Y)); // iY_1
    }
    for (int top = 3; top <= n; ++top) {
        std::vector<PauliString> next;
        next.reserve(2 * top - 2);
        for (const auto& p : pool) {
            PauliString q = p;
            q.set_op(top - 1, PauliOp::Z); // Z on the new top qubit
            next.push_back(std::move(q));
        }
        next.push_back(single_op(n, top - 1, PauliOp::Y)); // iY_top
        next.push_back(single_op(n, top - 2, PauliOp::Y)); // iY_{top-1}
        pool = std::move(next);
    }
    return pool;
}

inline std::vector<PauliString> mcp_local(int n) {
    std::vector<PauliString> pool;
    for (int k = 1; k <= n - 1; ++k) { // iZ_{k+1} Y_k
        PauliString p(n);
        p.set_op(k, PauliOp::Z);
        p.set_op(k - 1, PauliOp::Y);
        pool.push_back(std::move(p));
    }
    for (int k = 2; k <= n; ++k) pool.push_back(single_op(n, k - 1, PauliOp::Y));
    return pool;
}

} // namespace detail

inline McpPool build_mcp(int n, PoolVariant variant = PoolVariant::Recursive) {
    if (n < 2) throw SizeError("pool construction needs n >= 2 qubits");
    McpPool pool;
    pool.n = n;
    switch (variant) {
    case PoolVariant::Recursive: pool.ops = detail::mcp_recursion(n, false); break;
    case PoolVariant::RecursiveZBase: pool.ops = detail::mcp_recursion(n, true); break;
    case PoolVariant::Local: pool.ops = detail::mcp_local(n); break;
    }
    pool.validate();
    return pool;
}

// One line per operator, e.g. "YZIIIII"; '#' comments allowed.
inline McpPool load_pool_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open pool file '" + path + "'");
    McpPool pool;
    pool.n = n;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
        std::size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) continue;
        pool.ops.push_back(PauliString::parse(line.substr(start)));
    }
    if (pool.ops.empty()) throw IoError("pool file '" + path + "' contains no operators");
    pool.validate();
    return pool;
}

// CNOT staircase cost of exp(i theta P): 2 weight(P) - 2, zero for
// single-qubit rotations.
inline int cnot_cost(const PauliString& p) {
    const int w = p.weight();
    return w <= 1 ? 0 : 2 * w - 2;
}

inline long cnot_cost(const McpPool& pool, int layers) {
    long total = 0;
    for (const auto& p : pool.ops) total += cnot_cost(p);
    return total * layers;
}

// --- completeness diagnostics ---------------------------------------------

// Dense commutator closure of {i P_j} followed by the rank of the orbit
// tangent {A psi_0}.  A complete pool reaches 2^n - 1 (the real unit sphere
// tangent at the reference state).  Dense, so guarded to n <= 5.
inline int lie_closure_rank(const McpPool& pool, int max_qubits = 5) {
    if (pool.n > max_qubits)
        throw SizeError("lie_closure_rank: dense closure limited to n <= " +
                        std::to_string(max_qubits));
    pool.validate();
    const int dim = 1 << pool.n;
    const double tol = 1e-10;

    auto real_generator = [&](const PauliString& p) {
        // i * P is real for odd Y weight
        Eigen::MatrixXcd z = p.dense() * std::complex<double>(0.0, 1.0);
        return Eigen::MatrixXd(z.real());
    };

    std::vector<Eigen::MatrixXd> basis;
    auto try_add = [&](Eigen::MatrixXd cand) {
        for (const auto& b : basis) cand -= (b.cwiseProduct(cand)).sum() * b;
        const double nrm = cand.norm();
        if (nrm > tol) {
            basis.push_back(cand / nrm);
            return true;
        }
        return false;
    };

    for (const auto& p : pool.ops) try_add(real_generator(p));

    // grow until commutators stop producing new directions
    std::size_t frontier_begin = 0;
    while (frontier_begin < basis.size()) {
        const std::size_t frontier_end = basis.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i)
            for (std::size_t j = 0; j < frontier_end; ++j)
                try_add(basis[i] * basis[j] - basis[j] * basis[i]);
        frontier_begin = frontier_end;
    }

    Eigen::MatrixXd tangents(dim, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) tangents.col(k) = basis[k].col(0);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(tangents);
    qr.setThreshold(1e-9);
    return static_cast<int>(qr.rank());
}

// Exact closure over the Pauli-string basis (a commutator of two strings is
// again a single string, so the algebra is spanned by a set of strings and
// the orbit rank is the number of distinct flip masks).  Cheap at any n.
struct ClosureReport {
    int algebra_dim = 0;
    int orbit_rank = 0;
};

inline ClosureReport pool_closure_exact(const McpPool& pool) {
    pool.validate();
    struct XZ {
        std::uint64_t x, z;
        bool operator==(const XZ& o) const { return x == o.x && z == o.z; }
    };
    auto anticommute = [](const XZ& a, const XZ& b) {
        return (__builtin_popcountll(a.x & b.z) + __builtin_popcountll(a.z & b.x)) % 2 == 1;
    };

    std::vector<XZ> set;
    auto add = [&](XZ c) {
        for (const auto& e : set)
            if (e == c) return false;
        set.push_back(c);
        return true;
    };
    for (const auto& p : pool.ops) {
        std::uint64_t x = p.x_mask(), z = 0;
        for (int q = 0; q < p.n_qubits(); ++q)
            if (p.op(q) == PauliOp::Z || p.op(q) == PauliOp::Y) z |= 1ULL << q;
        add({x, z});
    }
    std::size_t frontier = 0;
    while (frontier < set.size()) {
        const std::size_t end = set.size();
        for (std::size_t i = frontier; i < end; ++i)
            for (std::size_t j = 0; j < end; ++j)
                if (anticommute(set[i], set[j])) add({set[i].x ^ set[j].x, set[i].z ^ set[j].z});
        frontier = end;
    }

    ClosureReport rep;
    rep.algebra_dim = static_cast<int>(set.size());
    std::vector<std::uint64_t> masks;
    for (const auto& e : set) {
        bool seen = false;
        for (auto m : masks)
            if (m == e.x) seen = true;
        if (!seen) masks.push_back(e.x);
    }
    rep.orbit_rank = static_cast<int>(masks.size());
    return rep;
}

} // namespace trion
