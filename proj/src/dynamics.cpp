// dynamics.cpp: local and dressed GKSL generators and their propagators.

#include "otto/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace otto {

StrokeGenerator::StrokeGenerator(std::vector<double> energies,
                                 std::vector<linalg::JumpTerm> jumps, double duration,
                                 std::optional<DressedFrame> frame)
    : energies_(std::move(energies)),
      jumps_(std::move(jumps)),
      duration_(duration),
      frame_(std::move(frame)) {
    if (!std::isfinite(duration_) || duration_ < 0.0) {
        throw std::invalid_argument("stroke duration must be finite and >= 0");
    }
    generator_ = linalg::vectorize_generator(hamiltonian(), jumps_);
    propagator_ = linalg::matexp(generator_.matrix() * duration_);
    const Eigen::MatrixXcd rates = rate_matrix().cast<linalg::Complex>() * duration_;
    population_propagator_ = linalg::matexp(rates).real();
}

linalg::Matrix StrokeGenerator::hamiltonian() const { return linalg::diagonal(energies_); }

Eigen::MatrixXd StrokeGenerator::rate_matrix() const {
    const Eigen::Index n = dim();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (const auto& jump : jumps_) {
        const Eigen::MatrixXd gain = jump.op.cwiseAbs2();
        const Eigen::VectorXd loss = (jump.op.adjoint() * jump.op).diagonal().real();
        m += jump.rate * gain;
        m.diagonal() -= jump.rate * loss;
    }
    return m;
}

StrokeGenerator StrokeGenerator::with_duration(double duration) const {
    return StrokeGenerator{energies_, jumps_, duration, frame_};
}

StrokeGenerator local_liouvillian(const SingleQubitLevels& levels, Stroke stroke,
                                  const bath::BathSpec& bath, double duration) {
    levels.validate();
    bath.validate();
    const double w = levels.gap(stroke);
    std::vector<linalg::JumpTerm> jumps{
        {bath::spectral_response(w, bath), linalg::sigma_minus()},
        {bath::spectral_response(-w, bath), linalg::sigma_plus()},
    };
    return StrokeGenerator{{0.0, w}, std::move(jumps), duration};
}

StrokeGenerator global_liouvillian(const CoupledSystemSpec& spec, Stroke stroke,
                                   const bath::BathSpec& bath, Contact contact,
                                   double duration) {
    spec.validate();
    bath.validate();
    DressedFrame frame = dress(spec, stroke);

    const double cos2 = std::pow(std::cos(frame.beta), 2);
    const double sin2 = std::pow(std::sin(frame.beta), 2);
    const double weight_1 = contact == Contact::Q1 ? cos2 : sin2;
    const double weight_2 = contact == Contact::Q1 ? sin2 : cos2;

    const linalg::Matrix id = linalg::identity(2);
    const linalg::Matrix lower_1 = linalg::kron(linalg::sigma_minus(), id);
    const linalg::Matrix lower_2 = linalg::kron(id, linalg::sigma_minus());

    std::vector<linalg::JumpTerm> jumps;
    auto add_transition = [&](double gap, double weight, const linalg::Matrix& lower) {
        // A vanishing gap or weight is no transition at all.
        if (gap == 0.0 || weight == 0.0) return;
        jumps.push_back({weight * bath::spectral_response(gap, bath), lower});
        jumps.push_back({weight * bath::spectral_response(-gap, bath), lower.adjoint()});
    };
    add_transition(frame.omega_tilde_1, weight_1, lower_1);
    add_transition(frame.omega_tilde_2, weight_2, lower_2);

    const auto e = frame.energies();
    return StrokeGenerator{{e.begin(), e.end()}, std::move(jumps), duration, std::move(frame)};
}

DensityMatrix evolve(const StrokeGenerator& gen, const DensityMatrix& rho) {
    if (rho.dim() != gen.dim()) {
        throw std::invalid_argument("evolve: state dimension does not match generator");
    }
    const linalg::Vector out = gen.propagator() * linalg::vec(rho.matrix());
    return DensityMatrix{linalg::unvec(out, gen.dim())};
}

Eigen::VectorXd evolve_populations(const StrokeGenerator& gen, const Eigen::VectorXd& p) {
    if (p.size() != gen.dim()) {
        throw std::invalid_argument("evolve_populations: dimension mismatch");
    }
    return gen.population_propagator() * p;
}

}  // namespace otto
