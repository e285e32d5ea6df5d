// linalg.cpp: Kronecker products, Pauli operators, Pade matrix exponential.

#include "otto/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace otto::linalg {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

// Higham (2005) degree-13 Padé coefficients and the matching 1-norm bound.
constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

Matrix matexp(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matexp: matrix must be square");
    }
    const Eigen::Index n = m.rows();
    if (n == 0) return m;

    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    if (norm1 == 0.0) return Matrix::Identity(n, n);
    int squarings = 0;
    if (norm1 > kTheta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
    }
    const Matrix a = m / std::ldexp(1.0, squarings);

    const Matrix id = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a4 * a2;
    const auto& b = kPade13;

    const Matrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                           b[5] * a4 + b[3] * a2 + b[1] * id;
    const Matrix u = a * u_inner;
    const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                     b[2] * a2 + b[0] * id;

    Matrix r = (v - u).partialPivLu().solve(v + u);
    for (int k = 0; k < squarings; ++k) {
        r = r * r;
    }
    return r;
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

Matrix diagonal(std::span<const double> entries) {
    const auto n = static_cast<Eigen::Index>(entries.size());
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) out(i, i) = entries[static_cast<std::size_t>(i)];
    return out;
}

Matrix sigma_minus() {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 1) = 1.0;
    return s;
}

Matrix sigma_plus() { return sigma_minus().adjoint(); }

Matrix sigma_x() { return sigma_minus() + sigma_plus(); }

Matrix sigma_z() {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
    return s;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

double max_abs(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& hermitian) {
    const Matrix sym = 0.5 * (hermitian + hermitian.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double inf_norm(const Matrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

Vector vec(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Eigen::Index dim) {
    if (v.size() != dim * dim) {
        throw std::invalid_argument("unvec: vector length does not match dim^2");
    }
    return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

Superoperator::Superoperator(Eigen::Index system_dim, Matrix matrix)
    : system_dim_(system_dim), matrix_(std::move(matrix)) {
    if (matrix_.rows() != dim() || matrix_.cols() != dim()) {
        throw std::invalid_argument("Superoperator: matrix must be dim^2 x dim^2");
    }
}

Superoperator Superoperator::zero(Eigen::Index system_dim) {
    const Eigen::Index d = system_dim * system_dim;
    return {system_dim, Matrix::Zero(d, d)};
}

Matrix Superoperator::apply(const Matrix& rho) const {
    if (rho.rows() != system_dim_ || rho.cols() != system_dim_) {
        throw std::invalid_argument("Superoperator::apply: dimension mismatch");
    }
    return unvec(matrix_ * vec(rho), system_dim_);
}

double Superoperator::trace_defect() const {
    const Vector id = vec(identity(system_dim_));
    const Eigen::RowVectorXcd row = id.adjoint() * matrix_;
    return row.size() == 0 ? 0.0 : row.cwiseAbs().maxCoeff();
}

Superoperator vectorize_generator(const Matrix& h, std::span<const JumpTerm> jumps) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("vectorize_generator: Hamiltonian must be square");
    }
    if (!is_hermitian(h, tolerances().hermiticity)) {
        throw std::invalid_argument("vectorize_generator: Hamiltonian is not Hermitian");
    }
    const Eigen::Index n = h.rows();
    const Matrix id = identity(n);
    const Complex i_unit{0.0, 1.0};

    Matrix l = -i_unit * (kron(id, h) - kron(h.transpose(), id));
    for (const auto& jump : jumps) {
        if (jump.rate < 0.0 || !std::isfinite(jump.rate)) {
            throw std::invalid_argument("vectorize_generator: jump rate must be finite and >= 0");
        }
        if (jump.op.rows() != n || jump.op.cols() != n) {
            throw std::invalid_argument("vectorize_generator: jump operator shape mismatch");
        }
        if (jump.rate == 0.0) continue;
        const Matrix odo = jump.op.adjoint() * jump.op;
        l += jump.rate * (kron(jump.op.conjugate(), jump.op) - 0.5 * kron(id, odo) -
                          0.5 * kron(odo.transpose(), id));
    }
    return {n, std::move(l)};
}

}  // namespace otto::linalg
