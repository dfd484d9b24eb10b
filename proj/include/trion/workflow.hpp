#pragma once

// End-to-end pipeline: system + intervals -> basis -> H/O/D matrices ->
// orthonormal frame -> encoded operators.  Shared by the CLI and the
// integration tests.

#include <optional>
#include <string>
#include <vector>

#include "trion/basis.hpp"
#include "trion/encoding.hpp"
#include "trion/integrals.hpp"
#include "trion/io.hpp"
#include "trion/spectra.hpp"
#include "trion/system.hpp"

namespace trion {

enum class Precision { Double, Extended };

inline const char* to_string(Precision p) {
    return p == Precision::Double ? "double" : "extended";
}

inline Precision precision_from_string(const std::string& s) {
    if (s == "double") return Precision::Double;
    if (s == "extended") return Precision::Extended;
    throw LookupError("unknown precision '" + s + "' (valid: double, extended)");
}

inline OrthoMode ortho_mode_from_string(const std::string& s) {
    if (s == "canonical") return OrthoMode::Canonical;
    if (s == "symmetric") return OrthoMode::Symmetric;
    throw LookupError("unknown orthogonalization '" + s + "' (valid: canonical, symmetric)");
}

struct PipelineConfig {
    std::string system_name = "helium";
    int qubits = 7;
    std::uint64_t seed = refdata::kDefaultSeed;
    Precision precision = Precision::Double;
    OrthoOptions ortho;
    std::optional<ThreeBodySystem> custom_system;
    std::optional<std::vector<IntervalSubset>> custom_subsets;
    std::optional<std::string> inject_h_file; // externally computed H (text format)
    std::optional<std::string> inject_o_file; // externally computed O
};

struct Pipeline {
    ThreeBodySystem system;
    BasisSet basis;
    Matrices raw; // H, O, D1, D2 in the raw (non-orthogonal) basis
    OrthoResult ortho;
    Eigen::MatrixXd Dp1, Dp2; // delta operators in the orthonormal basis
    GroundSolution ground;
    double exact_ref = std::numeric_limits<double>::quiet_NaN();
};

inline ThreeBodySystem pipeline_system(const PipelineConfig& cfg) {
    ThreeBodySystem system = cfg.custom_system ? *cfg.custom_system : preset(cfg.system_name);
    system.validate();
    return system;
}

inline BasisSet pipeline_basis(const PipelineConfig& cfg, const ThreeBodySystem& system) {
    const auto subsets =
        cfg.custom_subsets ? *cfg.custom_subsets : preset_subsets(system.name, cfg.qubits);
    BasisSet basis = generate_basis(subsets, cfg.seed, system.symmetric_23);
    if (basis.size() != (1 << cfg.qubits))
        throw SizeError("subset counts produce " + std::to_string(basis.size()) +
                        " functions but " + std::to_string(cfg.qubits) + " qubits need " +
                        std::to_string(1 << cfg.qubits));
    return basis;
}

inline Pipeline run_pipeline(const PipelineConfig& cfg) {
    Pipeline p;
    p.system = pipeline_system(cfg);
    p.basis = pipeline_basis(cfg, p.system);
    if (auto e = refdata::exact_energy(p.system.name)) p.exact_ref = *e;

    if (cfg.precision == Precision::Double) {
        p.raw = build_matrices(p.basis, p.system);
        if (cfg.inject_h_file) p.raw.H = read_matrix_file(*cfg.inject_h_file);
        if (cfg.inject_o_file) p.raw.O = read_matrix_file(*cfg.inject_o_file);
        p.ortho = canonical_orthogonalize(p.raw.H, p.raw.O, cfg.ortho);
        p.Dp1 = transform_operator(p.ortho, p.raw.D1);
        p.Dp2 = transform_operator(p.ortho, p.raw.D2);
    } else {
        auto mdd = build_matrices_extended(p.basis, p.system);
        p.raw = {to_eigen(mdd.H), to_eigen(mdd.O), to_eigen(mdd.D1), to_eigen(mdd.D2)};
        if (cfg.inject_h_file) {
            p.raw.H = read_matrix_file(*cfg.inject_h_file);
            mdd.H = from_eigen<DoubleDouble>(p.raw.H);
        }
        if (cfg.inject_o_file) {
            p.raw.O = read_matrix_file(*cfg.inject_o_file);
            mdd.O = from_eigen<DoubleDouble>(p.raw.O);
        }
        ExtendedOrtho ext = canonical_orthogonalize_extended(mdd.H, mdd.O, cfg.ortho);
        p.ortho = std::move(ext.rounded);
        p.Dp1 = transform_operator_extended(ext.U, mdd.D1);
        p.Dp2 = transform_operator_extended(ext.U, mdd.D2);
    }

    p.ground = solve_ground(p.ortho.Hp, /*keep_spectrum=*/true);
    return p;
}

inline EncodedOperator encode_hamiltonian(const Pipeline& p) {
    return pauli_decompose(p.ortho.Hp);
}

} // namespace trion
