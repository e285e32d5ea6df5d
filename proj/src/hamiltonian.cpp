// hamiltonian.cpp: single-qubit levels and the dressed two-qubit frame.

#include "otto/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace otto {

namespace {
bool positive(double v) { return std::isfinite(v) && v > 0.0; }
}  // namespace

void SingleQubitLevels::validate() const {
    if (!positive(omega_h) || !positive(omega_c)) {
        throw std::invalid_argument("single-qubit gaps must be positive");
    }
}

void CoupledSystemSpec::validate() const {
    if (!positive(omega1_h) || !positive(omega1_c) || !positive(omega2)) {
        throw std::invalid_argument("coupled-system gaps must be positive");
    }
    if (!std::isfinite(g) || g < 0.0) {
        throw std::invalid_argument("coupling strength g must be >= 0");
    }
}

linalg::Matrix single_hamiltonian(const SingleQubitLevels& levels, Stroke stroke) {
    linalg::Matrix h = linalg::Matrix::Zero(2, 2);
    h(1, 1) = levels.gap(stroke);
    return h;
}

linalg::Matrix coupled_hamiltonian(const CoupledSystemSpec& spec, Stroke stroke) {
    const double w1 = spec.omega1(stroke);
    linalg::Matrix h = linalg::Matrix::Zero(4, 4);
    h(1, 1) = spec.omega2;
    h(2, 2) = w1;
    h(3, 3) = w1 + spec.omega2;
    h(1, 2) = spec.g;
    h(2, 1) = spec.g;
    return h;
}

DressedFrame dress(const CoupledSystemSpec& spec, Stroke stroke) {
    const double w1 = spec.omega1(stroke);
    const double w2 = spec.omega2;
    const double detuning = w1 - w2;
    const double root = std::hypot(2.0 * spec.g, detuning);

    DressedFrame frame;
    frame.omega_tilde_1 = 0.5 * (w1 + w2 + root);
    frame.omega_tilde_2 = 0.5 * (w1 + w2 - root);
    // atan2 covers resonance (w1 == w2) and w1 < w2 without a branch.
    frame.beta = 0.5 * std::atan2(2.0 * spec.g, detuning);
    frame.total = w1 + w2;

    const double c = std::cos(frame.beta);
    const double s = std::sin(frame.beta);
    frame.unitary = linalg::identity(4);
    frame.unitary(1, 1) = c;
    frame.unitary(1, 2) = s;
    frame.unitary(2, 1) = -s;
    frame.unitary(2, 2) = c;
    return frame;
}

}  // namespace otto
