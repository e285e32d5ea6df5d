// state.cpp: density matrix validation and helpers.

#include "otto/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otto {

DensityMatrix::DensityMatrix(linalg::Matrix m) : m_(std::move(m)) {}

DensityMatrix DensityMatrix::ground(Eigen::Index dim) {
    linalg::Matrix m = linalg::Matrix::Zero(dim, dim);
    m(0, 0) = 1.0;
    return DensityMatrix{std::move(m)};
}

DensityMatrix DensityMatrix::from_populations(std::span<const double> populations) {
    return DensityMatrix{linalg::diagonal(populations)};
}

double DensityMatrix::coherence() const {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
        for (Eigen::Index j = 0; j < m_.cols(); ++j) {
            if (i != j) worst = std::max(worst, std::abs(m_(i, j)));
        }
    }
    return worst;
}

DensityMatrix DensityMatrix::dephased() const {
    linalg::Matrix d = m_.diagonal().asDiagonal();
    return DensityMatrix{std::move(d)};
}

void DensityMatrix::validate(const linalg::Tolerances& tol) const {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw std::invalid_argument("density matrix must be square and non-empty");
    }
    if (!linalg::is_hermitian(m_, tol.hermiticity)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - 1.0) > tol.trace) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
    if (linalg::min_eigenvalue(m_) < -tol.positivity) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

}  // namespace otto
