// cycle.cpp: Otto cycle strokes, ledger and limit-cycle iteration.

#include "otto/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace otto {

std::string_view to_string(MachineKind kind) {
    switch (kind) {
        case MachineKind::Engine: return "Engine";
        case MachineKind::Heater: return "Heater";
        case MachineKind::Cooler: return "Cooler";
        case MachineKind::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

std::string_view to_string(CycleStatus status) {
    switch (status) {
        case CycleStatus::Converged: return "converged";
        case CycleStatus::NonConvergence: return "non_convergence";
        case CycleStatus::DegenerateLedger: return "degenerate_ledger";
    }
    return "non_convergence";
}

void CycleConfig::validate() const {
    std::visit([](const auto& m) { m.validate(); }, medium);
    hot_bath.validate();
    cold_bath.validate();
    if (!std::isfinite(t_h) || !std::isfinite(t_c) || t_h < 0.0 || t_c < 0.0) {
        throw std::invalid_argument("stroke durations must be finite and >= 0");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
}

double StrokeLedger::residual() const { return std::abs(q_h + q_c + w_1 + w_2); }

double StrokeLedger::min_magnitude() const {
    return std::min({std::abs(q_h), std::abs(q_c), std::abs(w_1), std::abs(w_2)});
}

ConvergenceCheck check_convergence(const StrokeLedger& ledger) {
    const double floor = ledger.min_magnitude();
    if (floor < kDegenerateLedgerMagnitude) {
        // The relative rule is undefined; only an exhausted ledger stops.
        return ledger.residual() <= kDegenerateLedgerMagnitude ? ConvergenceCheck::Degenerate
                                                               : ConvergenceCheck::NotConverged;
    }
    return ledger.residual() <= floor * kConvergenceFraction ? ConvergenceCheck::Converged
                                                             : ConvergenceCheck::NotConverged;
}

CycleStrokes build_strokes(const CycleConfig& config) {
    config.validate();
    if (const auto* single = std::get_if<SingleQubitLevels>(&config.medium)) {
        return {local_liouvillian(*single, Stroke::Hot, config.hot_bath, config.t_h),
                local_liouvillian(*single, Stroke::Cold, config.cold_bath, config.t_c)};
    }
    const auto& spec = std::get<CoupledSystemSpec>(config.medium);
    return {global_liouvillian(spec, Stroke::Hot, config.hot_bath, config.contacts.hot,
                               config.t_h),
            global_liouvillian(spec, Stroke::Cold, config.cold_bath, config.contacts.cold,
                               config.t_c)};
}

namespace {

double energy(std::span<const double> levels, const DensityMatrix& rho) {
    double e = 0.0;
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
        e += levels[static_cast<std::size_t>(i)] * rho.population(i);
    }
    return e;
}

}  // namespace

CycleOutcome run_cycle(const CycleStrokes& strokes, const DensityMatrix& rho0) {
    if (rho0.dim() != strokes.hot.dim()) {
        throw std::invalid_argument("run_cycle: state dimension does not match medium");
    }
    const auto hot = strokes.hot.energies();
    const auto cold = strokes.cold.energies();

    CycleOutcome out;
    // (a) hot contact, (b) measurement.
    const DensityMatrix after_hot = evolve(strokes.hot, rho0).dephased();
    out.ledger.q_h = energy(hot, after_hot) - energy(hot, rho0);
    // (c) expansion: relabel to the cold Hamiltonian.
    out.ledger.w_1 = energy(cold, after_hot) - energy(hot, after_hot);
    // (d) cold contact, (e) measurement.
    const DensityMatrix after_cold = evolve(strokes.cold, after_hot).dephased();
    out.ledger.q_c = energy(cold, after_cold) - energy(cold, after_hot);
    // (f) compression back to the hot Hamiltonian.
    out.ledger.w_2 = energy(hot, after_cold) - energy(cold, after_cold);
    out.state = after_cold;
    return out;
}

CycleOutcome run_cycle(const CycleConfig& config, const DensityMatrix& rho0) {
    return run_cycle(build_strokes(config), rho0);
}

MachineKind classify(const StrokeLedger& ledger) {
    const double w = ledger.work();
    if (ledger.q_h > 0.0 && ledger.q_c < 0.0) {
        if (w < 0.0) return MachineKind::Engine;
        if (w > 0.0) return MachineKind::Heater;
    }
    if (ledger.q_h < 0.0 && ledger.q_c > 0.0 && w > 0.0) return MachineKind::Cooler;
    return MachineKind::Indeterminate;
}

Metrics metrics(const StrokeLedger& ledger, const CycleConfig& config) {
    Metrics m;
    const double w = ledger.work();
    const double period = config.t_h + config.t_c;
    if (period > 0.0) m.power = -w / period;

    switch (classify(ledger)) {
        case MachineKind::Engine:
            if (ledger.q_h != 0.0) m.efficiency = -w / ledger.q_h;
            break;
        case MachineKind::Heater:
            if (w != 0.0) m.hcop = -ledger.q_c / w;
            break;
        case MachineKind::Cooler:
            if (w != 0.0) m.ccop = ledger.q_c / w;
            break;
        case MachineKind::Indeterminate:
            break;
    }

    if (const auto* single = std::get_if<SingleQubitLevels>(&config.medium)) {
        m.eta_otto = 1.0 - single->omega_c / single->omega_h;
    } else {
        const auto& spec = std::get<CoupledSystemSpec>(config.medium);
        m.eta_otto = 1.0 - spec.omega1_c / spec.omega1_h;
        const double hot = dress(spec, Stroke::Hot).omega_tilde_1;
        const double cold = dress(spec, Stroke::Cold).omega_tilde_1;
        m.eta_otto_dressed = 1.0 - cold / hot;
    }
    const double ratio = config.cold_bath.temperature / config.hot_bath.temperature;
    m.eta_carnot = 1.0 - ratio;
    m.eta_ca = 1.0 - std::sqrt(ratio);
    return m;
}

LimitCycleResult iterate_to_limit(const CycleConfig& config) {
    const CycleStrokes strokes = build_strokes(config);

    LimitCycleResult result;
    DensityMatrix rho = DensityMatrix::ground(config.dim());

    for (int n = 1; n <= config.max_iterations; ++n) {
        CycleOutcome outcome = run_cycle(strokes, rho);
        result.iterations = n;
        result.ledger = outcome.ledger;
        result.state = rho;
        result.residuals.push_back(outcome.ledger.residual());

        const ConvergenceCheck check = check_convergence(outcome.ledger);
        if (check != ConvergenceCheck::NotConverged) {
            result.status = check == ConvergenceCheck::Converged ? CycleStatus::Converged
                                                                 : CycleStatus::DegenerateLedger;
            break;
        }
        rho = std::move(outcome.state);
        result.status = CycleStatus::NonConvergence;
    }

    result.kind = classify(result.ledger);
    result.metrics = metrics(result.ledger, config);
    return result;
}

}  // namespace otto
