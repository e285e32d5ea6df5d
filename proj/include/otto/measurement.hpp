// measurement.hpp: indirect work measurement with a clock and a work storage.
//
// The composite space is system x clock x storage (in that tensor order).
// The storage has as many levels as the system; storage level b carries the
// energy the system releases when eigenstate b is relabelled from the
// initial to the final Hamiltonian, so the swap unitary conserves the
// composite energy. This module is a verification oracle for the trace-based
// work in the cycle ledger.

#pragma once

#include <vector>

#include "otto/hamiltonian.hpp"
#include "otto/linalg.hpp"
#include "otto/state.hpp"

namespace otto::measurement {

/// Expand: hot -> cold Hamiltonian (step c). Compress: cold -> hot (step f).
enum class WorkDirection { Expand, Compress };

struct MeasurementSetup {
    std::vector<double> initial_energies;  // system energies while the clock reads 0
    std::vector<double> final_energies;    // system energies while the clock reads 1
    std::vector<double> storage_energies;  // diagonal of H_W

    /// Storage energies set to initial - final, level by level.
    static MeasurementSetup from_levels(std::vector<double> initial, std::vector<double> final);

    Eigen::Index system_dim() const { return static_cast<Eigen::Index>(initial_energies.size()); }
    Eigen::Index storage_dim() const { return static_cast<Eigen::Index>(storage_energies.size()); }
    Eigen::Index composite_dim() const { return system_dim() * 2 * storage_dim(); }
};

MeasurementSetup single_qubit_setup(const SingleQubitLevels& levels, WorkDirection direction);
MeasurementSetup coupled_setup(const DressedFrame& hot, const DressedFrame& cold,
                               WorkDirection direction);

/// H_SE = H_i x |0><0| x I + H_f x |1><1| x I + I x I x H_W.
linalg::Matrix composite_hamiltonian(const MeasurementSetup& setup);

/// Ground state: clock flips, storage untouched. Excited eigenstate b:
/// |clock 0, storage 0> <-> |clock 1, storage b>, everything else fixed.
linalg::Matrix swap_unitary(const MeasurementSetup& setup);

/// || U H_SE - H_SE U ||_inf
double verify_energy_conservation_of_unitary(const MeasurementSetup& setup);

struct StorageReadout {
    Eigen::VectorXd storage_probabilities;  // p_w from projecting the storage
    double storage_energy{0.0};             // tr[H_W rho_W]
    Eigen::VectorXd system_populations;     // system marginal after the swap
};

/// Full composite simulation: prepares sum_b p_b |b><b| x |0><0| x |0><0|,
/// applies the swap unitary and projects the storage onto its levels.
StorageReadout measure_storage(const MeasurementSetup& setup, const Eigen::VectorXd& populations);

/// Work delivered to the storage by a single qubit; (w_h - w_c) rho_11 for
/// an expansion. Only the populations of rho enter. Throws
/// std::invalid_argument for an invalid state.
double single_qubit_extracted_work(const DensityMatrix& rho, const SingleQubitLevels& levels,
                                   WorkDirection direction);

struct BareGaps {
    double omega1_h{0.0};
    double omega1_c{0.0};
    double omega2{0.0};
};

/// Closed form p_du (w~2^i - w~2^f) + p_ud (w~1^i - w~1^f) + p_uu (w1^i - w1^f)
/// for a state diagonal in the dressed frame. Throws std::invalid_argument for
/// an invalid state or coherences above 1e-10.
double coupled_extracted_work(const DensityMatrix& rho, const DressedFrame& hot,
                              const DressedFrame& cold, const BareGaps& gaps,
                              WorkDirection direction);

}  // namespace otto::measurement
