#pragma once

// Binary encoding of orthonormal-basis operators on n = log2(N) qubits.
// Basis function index i maps to the computational state whose bits are the
// binary digits of i with qubit 1 the least significant bit, so index 0 is
// |00...0> and index 1 is |10...0> (qubit-1 set, written qubit 1 first).
//
// A real symmetric N x N operator becomes a sum of Pauli strings with real
// coefficients c_P = tr(P M) / 2^n; only strings with an even number of Y
// factors survive.  The decomposition is used for reporting and resource
// analysis; simulation acts with the dense matrix, which is exact at these
// sizes.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trion/errors.hpp"
#include "trion/pauli.hpp"

namespace trion {

inline constexpr double kPauliPruneThreshold = 1e-14;

inline int qubits_for_dimension(Eigen::Index dim) {
    int n = 0;
    while ((Eigen::Index(1) << n) < dim) ++n;
    if ((Eigen::Index(1) << n) != dim)
        throw SizeError("dimension " + std::to_string(dim) + " is not a power of two");
    return n;
}

inline std::uint64_t encode_index(std::uint64_t i, int n) {
    if (i >= (1ULL << n))
        throw SizeError("basis index " + std::to_string(i) + " out of range for " +
                        std::to_string(n) + " qubits");
    return i; // the computational state IS the index; kept for clarity at call sites
}

// "1000000"-style text, qubit 1 leftmost.
inline std::string index_to_bits(std::uint64_t i, int n) {
    encode_index(i, n);
    std::string s(n, '0');
    for (int q = 0; q < n; ++q)
        if (i >> q & 1) s[q] = '1';
    return s;
}

inline std::uint64_t bits_to_index(const std::string& s) {
    std::uint64_t i = 0;
    for (std::size_t q = 0; q < s.size(); ++q) {
        if (s[q] == '1')
            i |= 1ULL << q;
        else if (s[q] != '0')
            throw LookupError("invalid bit string '" + s + "'");
    }
    return i;
}

// |bra><ket| on one qubit as a two-term Pauli expansion:
//   |0><0| = (I + Z)/2     |0><1| = (X + iY)/2
//   |1><0| = (X - iY)/2    |1><1| = (I - Z)/2
struct ProjectorTerm {
    std::complex<double> coeff;
    PauliOp op;
};

inline std::array<ProjectorTerm, 2> projector_to_paulis(int bra_bit, int ket_bit) {
    using C = std::complex<double>;
    if (bra_bit == 0 && ket_bit == 0)
        return {{{C(0.5, 0.0), PauliOp::I}, {C(0.5, 0.0), PauliOp::Z}}};
    if (bra_bit == 0 && ket_bit == 1)
        return {{{C(0.5, 0.0), PauliOp::X}, {C(0.0, 0.5), PauliOp::Y}}};
    if (bra_bit == 1 && ket_bit == 0)
        return {{{C(0.5, 0.0), PauliOp::X}, {C(0.0, -0.5), PauliOp::Y}}};
    return {{{C(0.5, 0.0), PauliOp::I}, {C(-0.5, 0.0), PauliOp::Z}}};
}

struct PauliTerm {
    PauliString op; // phase always +1
    double coeff;
};

struct EncodedOperator {
    Eigen::MatrixXd matrix;
    std::vector<PauliTerm> terms; // enumeration order (I<X<Y<Z per qubit, qubit 1 fastest)
    int n = 0;
};

namespace detail {

inline PauliString string_from_code(std::uint64_t code, int n) {
    std::vector<PauliOp> ops(n);
    for (int q = 0; q < n; ++q) ops[q] = static_cast<PauliOp>((code >> (2 * q)) & 3);
    return {std::move(ops), 0};
}

// tr(P M) computed through the one-nonzero-per-column structure of P.
inline std::complex<double> pauli_trace(const PauliString& p, const Eigen::MatrixXd& m) {
    const std::uint64_t x = p.x_mask();
    std::complex<double> sum = 0.0;
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(m.rows()); ++b)
        sum += p.amplitude(b) * m(b ^ x, b);
    return sum;
}

} // namespace detail

inline EncodedOperator pauli_decompose(const Eigen::MatrixXd& matrix) {
    const int n = qubits_for_dimension(matrix.rows());
    if (matrix.cols() != matrix.rows()) throw SizeError("pauli_decompose: matrix not square");
    EncodedOperator enc;
    enc.matrix = matrix;
    enc.n = n;
    const double norm = std::pow(2.0, n);
    const std::uint64_t n_strings = 1ULL << (2 * n);
    for (std::uint64_t code = 0; code < n_strings; ++code) {
        PauliString p = detail::string_from_code(code, n);
        const std::complex<double> c = detail::pauli_trace(p, matrix) / norm;
        if (std::abs(c) < kPauliPruneThreshold) continue;
        if (std::abs(c.imag()) > 1e-9 * (1.0 + std::abs(c.real())))
            throw NumericalError("pauli_decompose: complex coefficient for " + p.ops_str() +
                                 "; input matrix is not symmetric");
        enc.terms.push_back({std::move(p), c.real()});
    }
    return enc;
}

// Independent route: assemble sum_ij M_ij |i><j| through the single-qubit
// projector expansions.  Used to cross-check pauli_decompose.
inline std::vector<std::complex<double>> projector_route_coefficients(
    const Eigen::MatrixXd& matrix) {
    const int n = qubits_for_dimension(matrix.rows());
    std::vector<std::complex<double>> coeff(1ULL << (2 * n), 0.0);
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            if (matrix(i, j) == 0.0) continue;
            // expand the tensor product of per-qubit two-term sums
            std::vector<std::pair<std::complex<double>, std::uint64_t>> acc{
                {std::complex<double>(matrix(i, j), 0.0), 0ULL}};
            for (int q = 0; q < n; ++q) {
                const auto terms = projector_to_paulis((i >> q) & 1, (j >> q) & 1);
                std::vector<std::pair<std::complex<double>, std::uint64_t>> next;
                next.reserve(acc.size() * 2);
                for (const auto& [c, code] : acc)
                    for (const auto& t : terms)
                        next.emplace_back(c * t.coeff,
                                          code | (static_cast<std::uint64_t>(t.op) << (2 * q)));
                acc = std::move(next);
            }
            for (const auto& [c, code] : acc) coeff[code] += c;
        }
    }
    return coeff;
}

inline Eigen::MatrixXd reconstruct(const EncodedOperator& enc) {
    const Eigen::Index dim = Eigen::Index(1) << enc.n;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& term : enc.terms) {
        const std::uint64_t x = term.op.x_mask();
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
            const std::complex<double> a = term.op.amplitude(b);
            m(b ^ x, b) += term.coeff * a.real();
        }
    }
    return m;
}

inline bool all_terms_even_y(const EncodedOperator& enc) {
    for (const auto& t : enc.terms)
        if (t.op.y_count() % 2 != 0) return false;
    return true;
}

} // namespace trion
