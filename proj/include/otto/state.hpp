// state.hpp: density matrix of the working medium.

#pragma once

#include <span>

#include "otto/linalg.hpp"

namespace otto {

/// Hermitian, unit-trace, positive semidefinite matrix. The class does not
/// enforce validity on construction (propagated states carry round-off);
/// call validate() at API boundaries.
class DensityMatrix {
public:
    DensityMatrix() = default;
    explicit DensityMatrix(linalg::Matrix m);

    static DensityMatrix ground(Eigen::Index dim);
    static DensityMatrix from_populations(std::span<const double> populations);

    const linalg::Matrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

    double population(Eigen::Index i) const { return m_(i, i).real(); }
    Eigen::VectorXd populations() const { return m_.diagonal().real(); }
    linalg::Complex trace() const { return m_.trace(); }

    /// Largest off-diagonal magnitude.
    double coherence() const;
    /// Copy with every off-diagonal entry set to zero.
    DensityMatrix dephased() const;

    /// Throws std::invalid_argument when the matrix is not square, not
    /// Hermitian, not unit trace or has an eigenvalue below -positivity.
    void validate(const linalg::Tolerances& tol = linalg::tolerances()) const;

private:
    linalg::Matrix m_;
};

}  // namespace otto
