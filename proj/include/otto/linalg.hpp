// linalg.hpp: dense complex matrices, Kronecker products, matrix exponential
// and vectorized GKSL generators for 2- and 4-level systems.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace otto::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Numerical slack used by validity checks. Tests may tighten or loosen it.
struct Tolerances {
    double hermiticity{1e-12};
    double positivity{1e-8};
    double trace{1e-9};
};

Tolerances& tolerances();

/// Kronecker product; entry (i*rows(b)+k, j*cols(b)+l) is a(i,j)*b(k,l).
Matrix kron(const Matrix& a, const Matrix& b);

/// exp(m) by scaling and squaring around a degree-13 Padé approximant.
/// Throws std::invalid_argument for non-square input.
Matrix matexp(const Matrix& m);

Matrix identity(Eigen::Index n);
Matrix diagonal(std::span<const double> entries);

// Single-qubit operators in the (|0>=ground, |1>=excited) basis.
Matrix sigma_minus();  // |0><1|
Matrix sigma_plus();   // |1><0|
Matrix sigma_x();
Matrix sigma_z();      // diag(+1, -1)

bool is_hermitian(const Matrix& m, double tol);
double max_abs(const Matrix& m);
double min_eigenvalue(const Matrix& hermitian);
/// Induced infinity norm: maximum absolute row sum.
double inf_norm(const Matrix& m);

/// Column-major vectorization: vec(A rho B) = (B^T kron A) vec(rho).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index dim);

struct JumpTerm {
    double rate{0.0};
    Matrix op;
};

/// A linear map on vectorized n x n matrices (matrix of size n^2 x n^2).
class Superoperator {
public:
    Superoperator() = default;
    Superoperator(Eigen::Index system_dim, Matrix matrix);

    static Superoperator zero(Eigen::Index system_dim);

    Eigen::Index system_dim() const { return system_dim_; }
    Eigen::Index dim() const { return system_dim_ * system_dim_; }
    const Matrix& matrix() const { return matrix_; }

    Matrix apply(const Matrix& rho) const;

    /// max |(vec(I)^dagger L)_k|; zero for trace-preserving generators.
    double trace_defect() const;

private:
    Eigen::Index system_dim_{0};
    Matrix matrix_;
};

/// -i[h, .] + sum_k rate_k D[op_k], with
/// D[o]rho = o rho o^dagger - 1/2 {o^dagger o, rho}.
/// Throws std::invalid_argument for a negative rate, a non-Hermitian h or
/// mismatched operator shapes.
Superoperator vectorize_generator(const Matrix& h, std::span<const JumpTerm> jumps);

}  // namespace otto::linalg
