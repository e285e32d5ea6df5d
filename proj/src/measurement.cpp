// measurement.cpp: clock and storage simulation of the work strokes.

#include "otto/measurement.hpp"

#include <stdexcept>

namespace otto::measurement {

namespace {

constexpr double kDiagonalTolerance = 1e-10;

linalg::Matrix projector(Eigen::Index dim, Eigen::Index k) {
    linalg::Matrix p = linalg::Matrix::Zero(dim, dim);
    p(k, k) = 1.0;
    return p;
}

linalg::Matrix outer(Eigen::Index dim, Eigen::Index row, Eigen::Index col) {
    linalg::Matrix p = linalg::Matrix::Zero(dim, dim);
    p(row, col) = 1.0;
    return p;
}

void require_shapes(const MeasurementSetup& setup) {
    if (setup.system_dim() == 0 || setup.final_energies.size() != setup.initial_energies.size() ||
        setup.storage_dim() != setup.system_dim()) {
        throw std::invalid_argument("measurement setup: inconsistent level counts");
    }
}

}  // namespace

MeasurementSetup MeasurementSetup::from_levels(std::vector<double> initial,
                                               std::vector<double> final) {
    if (initial.size() != final.size()) {
        throw std::invalid_argument("measurement setup: level lists differ in length");
    }
    std::vector<double> storage(initial.size());
    for (std::size_t b = 0; b < initial.size(); ++b) storage[b] = initial[b] - final[b];
    return {std::move(initial), std::move(final), std::move(storage)};
}

MeasurementSetup single_qubit_setup(const SingleQubitLevels& levels, WorkDirection direction) {
    std::vector<double> hot{0.0, levels.omega_h};
    std::vector<double> cold{0.0, levels.omega_c};
    return direction == WorkDirection::Expand ? MeasurementSetup::from_levels(hot, cold)
                                              : MeasurementSetup::from_levels(cold, hot);
}

MeasurementSetup coupled_setup(const DressedFrame& hot, const DressedFrame& cold,
                               WorkDirection direction) {
    const auto h = hot.energies();
    const auto c = cold.energies();
    std::vector<double> hv(h.begin(), h.end());
    std::vector<double> cv(c.begin(), c.end());
    return direction == WorkDirection::Expand ? MeasurementSetup::from_levels(hv, cv)
                                              : MeasurementSetup::from_levels(cv, hv);
}

linalg::Matrix composite_hamiltonian(const MeasurementSetup& setup) {
    require_shapes(setup);
    const Eigen::Index ds = setup.system_dim();
    const Eigen::Index dw = setup.storage_dim();
    const linalg::Matrix id_s = linalg::identity(ds);
    const linalg::Matrix id_c = linalg::identity(2);
    const linalg::Matrix id_w = linalg::identity(dw);

    const linalg::Matrix h_i = linalg::diagonal(setup.initial_energies);
    const linalg::Matrix h_f = linalg::diagonal(setup.final_energies);
    const linalg::Matrix h_w = linalg::diagonal(setup.storage_energies);

    return linalg::kron(linalg::kron(h_i, projector(2, 0)), id_w) +
           linalg::kron(linalg::kron(h_f, projector(2, 1)), id_w) +
           linalg::kron(linalg::kron(id_s, id_c), h_w);
}

linalg::Matrix swap_unitary(const MeasurementSetup& setup) {
    require_shapes(setup);
    const Eigen::Index ds = setup.system_dim();
    const Eigen::Index dw = setup.storage_dim();
    const linalg::Matrix id_w = linalg::identity(dw);

    linalg::Matrix u = linalg::Matrix::Zero(setup.composite_dim(), setup.composite_dim());
    // Ground state: flip the clock only.
    u += linalg::kron(linalg::kron(projector(ds, 0), linalg::sigma_x()), id_w);
    for (Eigen::Index b = 1; b < ds; ++b) {
        const linalg::Matrix clock_storage =
            linalg::kron(outer(2, 0, 1), outer(dw, 0, b)) +
            linalg::kron(outer(2, 1, 0), outer(dw, b, 0)) +
            linalg::kron(projector(2, 0), id_w - projector(dw, 0)) +
            linalg::kron(projector(2, 1), id_w - projector(dw, b));
        u += linalg::kron(projector(ds, b), clock_storage);
    }
    return u;
}

double verify_energy_conservation_of_unitary(const MeasurementSetup& setup) {
    const linalg::Matrix u = swap_unitary(setup);
    const linalg::Matrix h = composite_hamiltonian(setup);
    return linalg::inf_norm(u * h - h * u);
}

StorageReadout measure_storage(const MeasurementSetup& setup,
                               const Eigen::VectorXd& populations) {
    require_shapes(setup);
    const Eigen::Index ds = setup.system_dim();
    const Eigen::Index dw = setup.storage_dim();
    if (populations.size() != ds) {
        throw std::invalid_argument("measure_storage: population count does not match system");
    }

    linalg::Matrix rho_s = linalg::Matrix::Zero(ds, ds);
    rho_s.diagonal() = populations.cast<linalg::Complex>();
    const linalg::Matrix rho_i =
        linalg::kron(linalg::kron(rho_s, projector(2, 0)), projector(dw, 0));
    const linalg::Matrix u = swap_unitary(setup);
    const linalg::Matrix rho_f = u * rho_i * u.adjoint();

    StorageReadout out;
    out.storage_probabilities = Eigen::VectorXd::Zero(dw);
    out.system_populations = Eigen::VectorXd::Zero(ds);
    // Composite index is (s * 2 + c) * dw + w; both marginals are read off
    // the diagonal, which is what the projective measurement sees.
    for (Eigen::Index s = 0; s < ds; ++s) {
        for (Eigen::Index c = 0; c < 2; ++c) {
            for (Eigen::Index w = 0; w < dw; ++w) {
                const Eigen::Index k = (s * 2 + c) * dw + w;
                const double p = rho_f(k, k).real();
                out.storage_probabilities(w) += p;
                out.system_populations(s) += p;
            }
        }
    }
    for (Eigen::Index w = 0; w < dw; ++w) {
        out.storage_energy +=
            out.storage_probabilities(w) * setup.storage_energies[static_cast<std::size_t>(w)];
    }
    return out;
}

double single_qubit_extracted_work(const DensityMatrix& rho, const SingleQubitLevels& levels,
                                   WorkDirection direction) {
    if (rho.dim() != 2) throw std::invalid_argument("single-qubit state must be 2x2");
    rho.validate();
    levels.validate();
    return measure_storage(single_qubit_setup(levels, direction), rho.populations())
        .storage_energy;
}

double coupled_extracted_work(const DensityMatrix& rho, const DressedFrame& hot,
                              const DressedFrame& cold, const BareGaps& gaps,
                              WorkDirection direction) {
    if (rho.dim() != 4) throw std::invalid_argument("coupled state must be 4x4");
    rho.validate();
    if (rho.coherence() > kDiagonalTolerance) {
        throw std::invalid_argument("coupled work measurement requires a dressed-diagonal state");
    }
    const double sign = direction == WorkDirection::Expand ? 1.0 : -1.0;
    const double d2 = hot.omega_tilde_2 - cold.omega_tilde_2;
    const double d1 = hot.omega_tilde_1 - cold.omega_tilde_1;
    const double du = gaps.omega1_h - gaps.omega1_c;
    return sign * (rho.population(1) * d2 + rho.population(2) * d1 + rho.population(3) * du);
}

}  // namespace otto::measurement
