// oracles.hpp: independent reference computations for the tests. Nothing
// here calls into the library's numerics beyond plain data types.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;

/// Sum of the first `terms` Taylor terms of exp(m).
inline Mat taylor_exp(const Mat& m, int terms = 30) {
    Mat sum = Mat::Identity(m.rows(), m.cols());
    Mat term = sum;
    for (int k = 1; k < terms; ++k) {
        term = term * m / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

inline Mat random_matrix(std::mt19937_64& rng, int n, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Cd{u(rng), u(rng)} * scale;
    return m;
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// Ohmic bath with s = 1 written out directly.
struct Bath {
    double temperature;
    double kappa{0.005};
    double cutoff{1000.0};

    double nbar(double w) const { return 1.0 / (std::exp(w / temperature) - 1.0); }
    double gamma(double w) const { return 2.0 * kPi * kappa * w * std::exp(-w / cutoff); }
    double down(double w) const { return gamma(w) * (1.0 + nbar(w)); }
    double up(double w) const { return gamma(w) * nbar(w); }
};

/// Excited population of a qubit of gap w after time t in contact with a
/// bath: p_ss + (p0 - p_ss) exp(-Gamma t).
inline double relax(double p0, double w, const Bath& bath, double t) {
    const double up = bath.up(w);
    const double down = bath.down(w);
    const double rate = up + down;
    const double ss = up / rate;
    return ss + (p0 - ss) * std::exp(-rate * t);
}

struct Ledger {
    double q_h{0.0}, q_c{0.0}, w_1{0.0}, w_2{0.0};
    int n{0};
    bool converged{false};
};

inline bool stop(const Ledger& l) {
    const double m = std::min({std::abs(l.q_h), std::abs(l.q_c), std::abs(l.w_1), std::abs(l.w_2)});
    return std::abs(l.q_h + l.q_c + l.w_1 + l.w_2) <= 1e-2 * m;
}

/// Single-qubit cycle iterated from the ground state with closed-form
/// relaxation.
inline Ledger single_cycle(double wh, double wc, const Bath& hot, const Bath& cold, double th,
                           double tc, int cap = 10000) {
    Ledger l;
    double p = 0.0;
    for (int n = 1; n <= cap; ++n) {
        const double ph = relax(p, wh, hot, th);
        const double pc = relax(ph, wc, cold, tc);
        l = {wh * (ph - p), wc * (pc - ph), (wc - wh) * ph, (wh - wc) * pc, n, false};
        if (stop(l)) {
            l.converged = true;
            return l;
        }
        p = pc;
    }
    return l;
}

// Dressed energies and mixing angle from a brute-force diagonalization of
// the one-excitation block.
struct Dressed {
    double w1t, w2t, beta, total;
    std::array<double, 4> energies() const { return {0.0, w2t, w1t, total}; }
};

inline Dressed dress(double w1, double w2, double g) {
    Eigen::Matrix2d block;
    block << w2, g, g, w1;  // rows/cols: |du>, |ud>
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(block);
    Dressed d;
    d.w2t = es.eigenvalues()(0);
    d.w1t = es.eigenvalues()(1);
    d.total = w1 + w2;
    d.beta = 0.5 * std::atan2(2.0 * g, w1 - w2);
    return d;
}

/// Population rate matrix of the global master equation in the dressed
/// basis; q1_contact selects cos^2 beta on the w~1 transitions.
inline Eigen::Matrix4d dressed_rates(const Dressed& d, const Bath& bath, bool q1_contact) {
    const double c2 = std::cos(d.beta) * std::cos(d.beta);
    const double s2 = std::sin(d.beta) * std::sin(d.beta);
    const double a1 = q1_contact ? c2 : s2;
    const double a2 = q1_contact ? s2 : c2;
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    auto link = [&](int lo, int hi, double w, double weight) {
        if (w == 0.0 || weight == 0.0) return;
        m(lo, hi) += weight * bath.down(w);
        m(hi, hi) -= weight * bath.down(w);
        m(hi, lo) += weight * bath.up(w);
        m(lo, lo) -= weight * bath.up(w);
    };
    link(0, 2, d.w1t, a1);  // ud -> dd
    link(1, 3, d.w1t, a1);  // uu -> du
    link(0, 1, d.w2t, a2);  // du -> dd
    link(2, 3, d.w2t, a2);  // uu -> ud
    return m;
}

/// Coupled cycle on dressed populations from the ground state.
inline Ledger coupled_cycle(double w1h, double w1c, double w2, double g, const Bath& hot,
                            const Bath& cold, bool hot_q1, bool cold_q1, double th, double tc,
                            int cap = 10000) {
    const Dressed dh = dress(w1h, w2, g);
    const Dressed dc = dress(w1c, w2, g);
    const Eigen::Matrix4d ph = (dressed_rates(dh, hot, hot_q1) * th).exp();
    const Eigen::Matrix4d pc = (dressed_rates(dc, cold, cold_q1) * tc).exp();
    const auto eh = dh.energies();
    const auto ec = dc.energies();
    auto energy = [](const std::array<double, 4>& e, const Eigen::Vector4d& p) {
        return e[0] * p(0) + e[1] * p(1) + e[2] * p(2) + e[3] * p(3);
    };
    Ledger l;
    Eigen::Vector4d p(1.0, 0.0, 0.0, 0.0);
    for (int n = 1; n <= cap; ++n) {
        const Eigen::Vector4d a = ph * p;
        const Eigen::Vector4d b = pc * a;
        l = {energy(eh, a) - energy(eh, p), energy(ec, b) - energy(ec, a),
             energy(ec, a) - energy(eh, a), energy(eh, b) - energy(ec, b), n, false};
        if (stop(l)) {
            l.converged = true;
            return l;
        }
        p = b;
    }
    return l;
}

}  // namespace oracle
