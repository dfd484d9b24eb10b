#pragma once

// Three-body systems: particle masses/charges and the coefficients of the
// center-of-mass Hamiltonian
//
//   H = -(1/2 m12) Lap_r1 - (1/2 m13) Lap_r2 - (1/m1) Grad_r1 . Grad_r2
//       + Z1 Z2 / r1 + Z1 Z3 / r2 + Z2 Z3 / R
//
// with m_ij = m_i m_j / (m_i + m_j), r1 = R2 - R1, r2 = R3 - R1,
// R = R3 - R2, everything in atomic units.

#include <cmath>
#include <string>

#include "trion/errors.hpp"
#include "trion/reference_data.hpp"

namespace trion {

// Particle mass in electron masses.  "Infinite" is an explicit state, not a
// large float, so that 1/m is exactly zero for clamped nuclei.
struct Mass {
    double value = 1.0;
    bool infinite = false;

    static Mass finite(double v) { return {v, false}; }
    static Mass inf() { return {0.0, true}; }

    double inverse() const { return infinite ? 0.0 : 1.0 / value; }
};

inline bool operator==(const Mass& a, const Mass& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || a.value == b.value;
}

struct ThreeBodySystem {
    std::string name;
    Mass m1, m2, m3;
    double Z1 = 0.0, Z2 = 0.0, Z3 = 0.0;
    // Exchange symmetry of particles 2 and 3 (r1 <-> r2 in the wavefunction
    // arguments).  Must agree with the masses/charges.
    bool symmetric_23 = false;

    double total_charge() const { return Z1 + Z2 + Z3; }

    void validate() const {
        auto check_mass = [&](const Mass& m, const char* which) {
            if (!m.infinite && !(m.value > 0.0))
                throw InvalidSystemError(name + ": " + which + " must be positive or infinite");
            if (!m.infinite && !std::isfinite(m.value))
                throw InvalidSystemError(name + ": " + which + " is not finite");
        };
        check_mass(m1, "m1");
        check_mass(m2, "m2");
        check_mass(m3, "m3");
        const bool sym = (m2 == m3) && (Z2 == Z3);
        if (symmetric_23 != sym)
            throw InvalidSystemError(name + ": symmetric_23 flag inconsistent with m2/m3, Z2/Z3");
    }
};

// The six numbers that parameterize the Hamiltonian matrix elements.
struct KineticCoefficients {
    double inv_2m12 = 0.0; // 1 / (2 m12)
    double inv_2m13 = 0.0; // 1 / (2 m13)
    double inv_m1 = 0.0;   // 1 / m1, exactly 0 for an infinitely heavy particle 1
    double zz12 = 0.0;     // Z1 Z2
    double zz13 = 0.0;     // Z1 Z3
    double zz23 = 0.0;     // Z2 Z3
};

// 1/(2 m_ab) = (1/m_a + 1/m_b) / 2, which handles infinite masses exactly.
inline KineticCoefficients kinetic_coefficients(const ThreeBodySystem& s) {
    s.validate();
    KineticCoefficients k;
    k.inv_2m12 = 0.5 * (s.m1.inverse() + s.m2.inverse());
    k.inv_2m13 = 0.5 * (s.m1.inverse() + s.m3.inverse());
    k.inv_m1 = s.m1.inverse();
    k.zz12 = s.Z1 * s.Z2;
    k.zz13 = s.Z1 * s.Z3;
    k.zz23 = s.Z2 * s.Z3;
    return k;
}

// Returns the same physical system with particles 2 and 3 relabeled.
inline ThreeBodySystem swap_particles_23(ThreeBodySystem s) {
    std::swap(s.m2, s.m3);
    std::swap(s.Z2, s.Z3);
    return s;
}

// Built-in systems.  Molecular presets put the electron first (r1, r2 are
// then electron-nucleus vectors and R the internuclear distance); atomic
// presets put the nucleus first (R is the interelectronic distance).
// For hdplus the deuteron is particle 2, so r1 is the electron-deuteron
// vector; pass --swap-nuclei (CLI) or swap_particles_23 to flip.
inline ThreeBodySystem preset(const std::string& name) {
    const double mp = refdata::kProtonElectronMassRatio;
    const double md = refdata::kDeuteronElectronMassRatio;
    if (name == "h2plus")
        return {"h2plus", Mass::finite(1.0), Mass::finite(mp), Mass::finite(mp), -1.0, +1.0, +1.0, true};
    if (name == "hdplus")
        return {"hdplus", Mass::finite(1.0), Mass::finite(md), Mass::finite(mp), -1.0, +1.0, +1.0, false};
    if (name == "helium")
        return {"helium", Mass::inf(), Mass::finite(1.0), Mass::finite(1.0), +2.0, -1.0, -1.0, true};
    if (name == "hminus")
        return {"hminus", Mass::inf(), Mass::finite(1.0), Mass::finite(1.0), +1.0, -1.0, -1.0, true};
    throw LookupError("unknown system preset '" + name +
                      "' (valid: h2plus, hdplus, helium, hminus)");
}

} // namespace trion
