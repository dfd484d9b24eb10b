#pragma once

// Pauli strings over n qubits with phase tracking.
//
// Qubit 1 is the least significant bit of a computational-basis index, and
// string text is written qubit 1 first, so "XZI" means X on qubit 1 (bit 0)
// and Z on qubit 2 (bit 1).  A string's phase is i^k, k in {0,1,2,3}.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trion/errors.hpp"

namespace trion {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char to_char(PauliOp op) { return "IXYZ"[static_cast<int>(op)]; }

inline PauliOp pauli_from_char(char c) {
    switch (c) {
    case 'I': return PauliOp::I;
    case 'X': return PauliOp::X;
    case 'Y': return PauliOp::Y;
    case 'Z': return PauliOp::Z;
    default: throw LookupError(std::string("invalid Pauli character '") + c + "'");
    }
}

class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(int n) : ops_(n, PauliOp::I) {}
    PauliString(std::vector<PauliOp> ops, int phase_power = 0)
        : ops_(std::move(ops)), phase_(static_cast<std::uint8_t>(((phase_power % 4) + 4) % 4)) {}

    // Parses "XZIIYII" (qubit 1 leftmost); a leading "i", "-i" or "-" sets
    // the phase.
    static PauliString parse(const std::string& text) {
        std::size_t pos = 0;
        int phase = 0;
        if (text.rfind("-i", 0) == 0) {
            phase = 3;
            pos = 2;
        } else if (text.rfind("i", 0) == 0) {
            phase = 1;
            pos = 1;
        } else if (text.rfind("-", 0) == 0) {
            phase = 2;
            pos = 1;
        }
        std::vector<PauliOp> ops;
        for (; pos < text.size(); ++pos) ops.push_back(pauli_from_char(text[pos]));
        if (ops.empty()) throw LookupError("empty Pauli string");
        return {std::move(ops), phase};
    }

    int n_qubits() const { return static_cast<int>(ops_.size()); }
    PauliOp op(int qubit_index) const { return ops_[qubit_index]; } // 0-based (qubit 1 = 0)
    void set_op(int qubit_index, PauliOp op) { ops_[qubit_index] = op; }

    int phase_power() const { return phase_; }
    std::complex<double> phase() const {
        static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[phase_];
    }

    int weight() const {
        int w = 0;
        for (auto op : ops_)
            if (op != PauliOp::I) ++w;
        return w;
    }

    int y_count() const {
        int w = 0;
        for (auto op : ops_)
            if (op == PauliOp::Y) ++w;
        return w;
    }

    // bit q set where the op flips bit q (X or Y)
    std::uint64_t x_mask() const {
        std::uint64_t m = 0;
        for (std::size_t q = 0; q < ops_.size(); ++q)
            if (ops_[q] == PauliOp::X || ops_[q] == PauliOp::Y) m |= 1ULL << q;
        return m;
    }

    // bit q set where the op contributes (-1)^{b_q} (Z or Y)
    std::uint64_t zy_mask() const {
        std::uint64_t m = 0;
        for (std::size_t q = 0; q < ops_.size(); ++q)
            if (ops_[q] == PauliOp::Z || ops_[q] == PauliOp::Y) m |= 1ULL << q;
        return m;
    }

    // P|b> = amplitude(b) |b ^ x_mask()>
    std::complex<double> amplitude(std::uint64_t b) const {
        static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const int k = (phase_ + y_count()) % 4;
        const int sign = __builtin_popcountll(b & zy_mask()) % 2 ? -1 : 1;
        return static_cast<double>(sign) * ipow[k];
    }

    std::string str() const {
        std::string s;
        switch (phase_) {
        case 1: s += "i"; break;
        case 2: s += "-"; break;
        case 3: s += "-i"; break;
        default: break;
        }
        for (auto op : ops_) s += to_char(op);
        return s;
    }

    // Text without the phase prefix, e.g. for CSV columns.
    std::string ops_str() const {
        std::string s;
        for (auto op : ops_) s += to_char(op);
        return s;
    }

    Eigen::MatrixXcd dense() const {
        const int dim = 1 << n_qubits();
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
        for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b)
            m(b ^ x_mask(), b) = amplitude(b);
        return m;
    }

    friend bool operator==(const PauliString& a, const PauliString& b) {
        return a.ops_ == b.ops_ && a.phase_ == b.phase_;
    }

  private:
    std::vector<PauliOp> ops_;
    std::uint8_t phase_ = 0;
};

// Single Y (or X/Z) on one qubit, identity elsewhere.
inline PauliString single_op(int n, int qubit_index, PauliOp op) {
    PauliString p(n);
    p.set_op(qubit_index, op);
    return p;
}

namespace detail {

// sigma_a sigma_b = i^k sigma_c
struct SingleProduct {
    PauliOp op;
    int phase_power;
};

inline SingleProduct single_product(PauliOp a, PauliOp b) {
    if (a == PauliOp::I) return {b, 0};
    if (b == PauliOp::I) return {a, 0};
    if (a == b) return {PauliOp::I, 0};
    // XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i
    static constexpr int kThird[4][4] = {
        {0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    const int c = kThird[static_cast<int>(a)][static_cast<int>(b)];
    const bool cyclic = (a == PauliOp::X && b == PauliOp::Y) ||
                        (a == PauliOp::Y && b == PauliOp::Z) ||
                        (a == PauliOp::Z && b == PauliOp::X);
    return {static_cast<PauliOp>(c), cyclic ? 1 : 3};
}

} // namespace detail

inline PauliString multiply(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits())
        throw SizeError("Pauli product: length mismatch (" + std::to_string(a.n_qubits()) +
                        " vs " + std::to_string(b.n_qubits()) + ")");
    std::vector<PauliOp> ops(a.n_qubits());
    int phase = a.phase_power() + b.phase_power();
    for (int q = 0; q < a.n_qubits(); ++q) {
        auto pr = detail::single_product(a.op(q), b.op(q));
        ops[q] = pr.op;
        phase += pr.phase_power;
    }
    return {std::move(ops), phase};
}

inline bool commutes(const PauliString& a, const PauliString& b) {
    if (a.n_qubits() != b.n_qubits()) throw SizeError("Pauli commutator: length mismatch");
    int anti = 0;
    for (int q = 0; q < a.n_qubits(); ++q) {
        const PauliOp pa = a.op(q), pb = b.op(q);
        if (pa != PauliOp::I && pb != PauliOp::I && pa != pb) ++anti;
    }
    return anti % 2 == 0;
}

// [a, b] = 2 a b when a and b anticommute, zero otherwise.  The returned
// string carries the phase of the product; the factor 2 is implied.
inline std::optional<PauliString> commutator(const PauliString& a, const PauliString& b) {
    if (commutes(a, b)) return std::nullopt;
    return multiply(a, b);
}

} // namespace trion
