// dynamics.hpp: standard (single-qubit) and global (dressed, coupled-qubit)
// GKSL generators with cached stroke propagators.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "otto/bath.hpp"
#include "otto/hamiltonian.hpp"
#include "otto/linalg.hpp"
#include "otto/state.hpp"

namespace otto {

/// Qubit through which a bath couples to the coupled medium.
enum class Contact { Q1, Q2 };

/// Generator of one isochoric stroke together with exp(L * duration).
///
/// The working frame is the eigenbasis of the stroke Hamiltonian: the bare
/// basis for a single qubit and the dressed basis for a coupled pair. In that
/// frame the Hamiltonian is diag(energies()). Instances are immutable and can
/// be shared between threads.
class StrokeGenerator {
public:
    StrokeGenerator(std::vector<double> energies, std::vector<linalg::JumpTerm> jumps,
                    double duration, std::optional<DressedFrame> frame = std::nullopt);

    const linalg::Superoperator& generator() const { return generator_; }
    const linalg::Matrix& propagator() const { return propagator_; }
    double duration() const { return duration_; }
    Eigen::Index dim() const { return static_cast<Eigen::Index>(energies_.size()); }
    std::span<const double> energies() const { return energies_; }
    linalg::Matrix hamiltonian() const;
    std::span<const linalg::JumpTerm> jumps() const { return jumps_; }
    const std::optional<DressedFrame>& frame() const { return frame_; }

    /// Classical rate matrix M with dp/dt = M p for frame-diagonal states.
    Eigen::MatrixXd rate_matrix() const;
    /// exp(M * duration); the population-only fast path.
    const Eigen::MatrixXd& population_propagator() const { return population_propagator_; }

    /// Same generator, new duration; both propagators are recomputed.
    StrokeGenerator with_duration(double duration) const;

private:
    std::vector<double> energies_;
    std::vector<linalg::JumpTerm> jumps_;
    double duration_{0.0};
    std::optional<DressedFrame> frame_;
    linalg::Superoperator generator_;
    linalg::Matrix propagator_;
    Eigen::MatrixXd population_propagator_;
};

/// -i[H_S, .] + G(w) D[sigma-] + G(-w) D[sigma+] for the stroke gap w.
StrokeGenerator local_liouvillian(const SingleQubitLevels& levels, Stroke stroke,
                                  const bath::BathSpec& bath, double duration);

/// Global generator in the dressed frame of the stroke. Dissipators on the
/// w~1 transitions (lowering on the first tensor factor) carry weight cos^2
/// beta for a Q1 contact and sin^2 beta for Q2; the w~2 transitions (second
/// factor) carry the complementary weight.
StrokeGenerator global_liouvillian(const CoupledSystemSpec& spec, Stroke stroke,
                                   const bath::BathSpec& bath, Contact contact,
                                   double duration);

/// Applies the cached propagator. Throws std::invalid_argument on a
/// dimension mismatch.
DensityMatrix evolve(const StrokeGenerator& gen, const DensityMatrix& rho);

/// Population fast path for frame-diagonal states.
Eigen::VectorXd evolve_populations(const StrokeGenerator& gen, const Eigen::VectorXd& p);

}  // namespace otto
