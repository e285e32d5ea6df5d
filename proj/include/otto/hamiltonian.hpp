// hamiltonian.hpp: bare single-qubit and XX-coupled two-qubit Hamiltonians,
// and the dressed (diagonalizing) frame of the coupled Hamiltonian.
//
// Two-qubit basis order is (dd, du, ud, uu) = |Q1 Q2> with d = ground,
// u = excited; Q1 is the first tensor factor. Every module shares it.

#pragma once

#include <array>

#include "otto/linalg.hpp"

namespace otto {

enum class Stroke { Hot, Cold };

struct SingleQubitLevels {
    double omega_h{2.0};
    double omega_c{1.0};

    double gap(Stroke s) const { return s == Stroke::Hot ? omega_h : omega_c; }
    /// Both gaps positive and finite.
    void validate() const;
};

struct CoupledSystemSpec {
    double omega1_h{2.0};
    double omega1_c{1.0};
    double omega2{1.0};
    double g{0.0};

    double omega1(Stroke s) const { return s == Stroke::Hot ? omega1_h : omega1_c; }
    /// Gaps positive and finite, g >= 0.
    void validate() const;
};

struct DressedFrame {
    double omega_tilde_1{0.0};  // larger eigenvalue of the one-excitation block
    double omega_tilde_2{0.0};
    double beta{0.0};           // half the mixing angle
    double total{0.0};          // omega1 + omega2, energy of |uu>
    linalg::Matrix unitary;     // columns are dressed eigenvectors

    /// Dressed energies in basis order (0, w~2, w~1, w1 + w2).
    std::array<double, 4> energies() const {
        return {0.0, omega_tilde_2, omega_tilde_1, total};
    }
};

linalg::Matrix single_hamiltonian(const SingleQubitLevels& levels, Stroke stroke);

linalg::Matrix coupled_hamiltonian(const CoupledSystemSpec& spec, Stroke stroke);

DressedFrame dress(const CoupledSystemSpec& spec, Stroke stroke);

}  // namespace otto
