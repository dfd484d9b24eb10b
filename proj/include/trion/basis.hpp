#pragma once

// Explicitly correlated exponential basis for S states:
//
//   phi(r1, r2, R) = [Re or Im] exp(-a r1 - b r2 - g R)   (+ exchange image
//                                                           when symmetrized)
//
// with complex exponents (a, b, g) drawn uniformly from tuned interval
// subsets.  Each sampled triple contributes two functions, its real part
// and its imaginary part, so a subset of count 2k yields k triples.

#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "trion/errors.hpp"
#include "trion/reference_data.hpp"
#include "trion/rng.hpp"
#include "trion/textio.hpp"

namespace trion {

using Complexd = std::complex<double>;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    void validate(const char* what) const {
        if (!(lo <= hi)) throw SizeError(std::string("interval ") + what + ": lo > hi");
    }
};

struct IntervalSubset {
    Interval re_alpha, im_alpha;
    Interval re_beta, im_beta;
    Interval re_gamma, im_gamma;
    int count = 0; // number of basis functions (two per sampled triple)

    void validate() const {
        re_alpha.validate("Re(alpha)");
        im_alpha.validate("Im(alpha)");
        re_beta.validate("Re(beta)");
        im_beta.validate("Im(beta)");
        re_gamma.validate("Re(gamma)");
        im_gamma.validate("Im(gamma)");
        if (count < 2 || count % 2 != 0)
            throw SizeError("subset count must be even and >= 2, got " + std::to_string(count));
    }
};

inline IntervalSubset subset_from_row(const refdata::IntervalRow& row) {
    IntervalSubset s;
    s.re_alpha = {row.re_alpha_lo, row.re_alpha_hi};
    s.im_alpha = {row.im_alpha_lo, row.im_alpha_hi};
    s.re_beta = {row.re_beta_lo, row.re_beta_hi};
    s.im_beta = {row.im_beta_lo, row.im_beta_hi};
    s.re_gamma = {row.re_gamma_lo, row.re_gamma_hi};
    s.im_gamma = {row.im_gamma_lo, row.im_gamma_hi};
    s.count = row.count;
    return s;
}

// Flat 13-number form used by config files: the 12 bounds in table column
// order (Re a lo, Re a hi, Im a lo, Im a hi, Re b ..., Im g hi) then count.
inline IntervalSubset subset_from_flat(const std::vector<double>& v) {
    if (v.size() != 13) throw SizeError("subset row needs 13 numbers (12 bounds + count)");
    refdata::IntervalRow row{v[0], v[1], v[2],  v[3],  v[4],  v[5], v[6],
                             v[7], v[8], v[9], v[10], v[11], static_cast<int>(v[12])};
    if (row.count != v[12]) throw SizeError("subset count must be an integer");
    return subset_from_row(row);
}

enum class Part : std::uint8_t { Re, Im };

inline const char* to_string(Part p) { return p == Part::Re ? "Re" : "Im"; }

struct BasisFunction {
    Complexd alpha, beta, gamma;
    Part part = Part::Re;
    bool symmetrized = false;
    int sym_sign = +1; // ground states only; -1 reserved

    // Normalizability of the pair-sum denominators.
    bool exponents_ok() const {
        return alpha.real() + beta.real() >= 0.0 && beta.real() + gamma.real() > 0.0 &&
               gamma.real() + alpha.real() > 0.0;
    }

    bool im_degenerate() const {
        return part == Part::Im && alpha.imag() == 0.0 && beta.imag() == 0.0 &&
               gamma.imag() == 0.0;
    }
};

// r1 <-> r2 exchange image: alpha and beta swap, gamma unchanged.
inline BasisFunction exchange(BasisFunction f) {
    std::swap(f.alpha, f.beta);
    return f;
}

struct BasisSet {
    std::vector<BasisFunction> functions;
    std::vector<IntervalSubset> subsets;
    std::uint64_t seed = 0;

    int size() const { return static_cast<int>(functions.size()); }

    int qubits() const {
        int n = 0;
        while ((1 << (n + 1)) <= size()) ++n;
        return n;
    }
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Draws count/2 exponent triples per subset (components independently
// uniform on their intervals, stream s of the master seed for subset s)
// and appends a Re function then an Im function per triple.  Triples whose
// Im part would vanish identically or whose pair sums are not normalizable
// are redrawn a bounded number of times.
inline BasisSet generate_basis(const std::vector<IntervalSubset>& subsets, std::uint64_t seed,
                               bool symmetrized) {
    int total = 0;
    for (const auto& s : subsets) {
        s.validate();
        total += s.count;
    }
    if (!is_power_of_two(total))
        throw SizeError("subset counts sum to " + std::to_string(total) +
                        ", which is not a power of two");

    BasisSet basis;
    basis.subsets = subsets;
    basis.seed = seed;
    basis.functions.reserve(total);

    constexpr int kMaxRetries = 1000;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        const auto& sub = subsets[s];
        SplitMix64 rng(seed, static_cast<std::uint64_t>(s));
        for (int t = 0; t < sub.count / 2; ++t) {
            BasisFunction re_fn;
            bool ok = false;
            for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
                double ar = rng.next_in(sub.re_alpha.lo, sub.re_alpha.hi);
                double ai = rng.next_in(sub.im_alpha.lo, sub.im_alpha.hi);
                double br = rng.next_in(sub.re_beta.lo, sub.re_beta.hi);
                double bi = rng.next_in(sub.im_beta.lo, sub.im_beta.hi);
                double gr = rng.next_in(sub.re_gamma.lo, sub.re_gamma.hi);
                double gi = rng.next_in(sub.im_gamma.lo, sub.im_gamma.hi);
                re_fn = {{ar, ai}, {br, bi}, {gr, gi}, Part::Re, symmetrized, +1};
                BasisFunction im_fn = re_fn;
                im_fn.part = Part::Im;
                if (re_fn.exponents_ok() && !im_fn.im_degenerate()) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                throw SizeError("subset " + std::to_string(s) +
                                ": could not sample a valid exponent triple (intervals too "
                                "degenerate?)");
            BasisFunction im_fn = re_fn;
            im_fn.part = Part::Im;
            basis.functions.push_back(re_fn);
            basis.functions.push_back(im_fn);
        }
    }

    // Pairwise normalizability: every pair (including self-pairs and the
    // conjugated combinations) must keep the integral denominators in the
    // right half plane.  Cheap at these sizes, so checked up front.
    if (total <= 256) {
        for (std::size_t i = 0; i < basis.functions.size(); ++i) {
            for (std::size_t j = i; j < basis.functions.size(); ++j) {
                const auto& fi = basis.functions[i];
                const auto& fj = basis.functions[j];
                double ab = fi.alpha.real() + fj.alpha.real() + fi.beta.real() + fj.beta.real();
                double bg = fi.beta.real() + fj.beta.real() + fi.gamma.real() + fj.gamma.real();
                double ga = fi.gamma.real() + fj.gamma.real() + fi.alpha.real() + fj.alpha.real();
                if (!(ab > 0.0 && bg > 0.0 && ga > 0.0))
                    throw SizeError("functions " + std::to_string(i) + "," + std::to_string(j) +
                                    " violate pair-sum positivity");
            }
        }
    }
    return basis;
}

// Embedded-table lookup: (system name, N = 2^qubits).
inline std::vector<IntervalSubset> preset_subsets(const std::string& system, int qubits) {
    const int n_fns = 1 << qubits;
    const auto* ref = refdata::find_reference(system, n_fns);
    if (!ref) {
        std::string msg = "no embedded interval table for system '" + system + "' with " +
                          std::to_string(n_fns) + " functions (" + std::to_string(qubits) +
                          " qubits); available:";
        for (int n : refdata::available_basis_sizes(system)) msg += " N=" + std::to_string(n);
        if (refdata::available_basis_sizes(system).empty()) msg += " none";
        throw LookupError(msg);
    }
    std::vector<IntervalSubset> subsets;
    for (const auto& row : ref->rows) subsets.push_back(subset_from_row(row));
    return subsets;
}

// --- serialization ------------------------------------------------------
//
// basis.json is written by hand (not through a JSON library) so the byte
// stream is a pure function of the data: fixed key order, 17 significant
// digits, '\n' newlines.

inline std::string basis_to_json(const BasisSet& b, const std::string& system_name) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"format\": \"trion-basis-v1\",\n";
    out << "  \"generator\": \"splitmix64-stream-v1\",\n";
    out << "  \"system\": \"" << system_name << "\",\n";
    out << "  \"seed\": " << b.seed << ",\n";
    out << "  \"subsets\": [\n";
    for (std::size_t s = 0; s < b.subsets.size(); ++s) {
        const auto& x = b.subsets[s];
        out << "    [" << g17(x.re_alpha.lo) << ", " << g17(x.re_alpha.hi) << ", "
            << g17(x.im_alpha.lo) << ", " << g17(x.im_alpha.hi) << ", " << g17(x.re_beta.lo)
            << ", " << g17(x.re_beta.hi) << ", " << g17(x.im_beta.lo) << ", " << g17(x.im_beta.hi)
            << ", " << g17(x.re_gamma.lo) << ", " << g17(x.re_gamma.hi) << ", "
            << g17(x.im_gamma.lo) << ", " << g17(x.im_gamma.hi) << ", " << x.count << "]"
            << (s + 1 < b.subsets.size() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"functions\": [\n";
    for (std::size_t i = 0; i < b.functions.size(); ++i) {
        const auto& f = b.functions[i];
        out << "    {\"alpha\": [" << g17(f.alpha.real()) << ", " << g17(f.alpha.imag())
            << "], \"beta\": [" << g17(f.beta.real()) << ", " << g17(f.beta.imag())
            << "], \"gamma\": [" << g17(f.gamma.real()) << ", " << g17(f.gamma.imag())
            << "], \"part\": \"" << to_string(f.part) << "\", \"symmetrized\": "
            << (f.symmetrized ? "true" : "false") << ", \"sym_sign\": " << f.sym_sign << "}"
            << (i + 1 < b.functions.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

} // namespace trion
