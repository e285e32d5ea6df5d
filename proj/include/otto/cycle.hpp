// cycle.hpp: six-step Otto cycle, energy ledger, limit-cycle iteration,
// machine classification and performance metrics.
//
// Sign convention: every ledger entry is positive when energy flows into the
// working medium.

#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "otto/bath.hpp"
#include "otto/dynamics.hpp"
#include "otto/hamiltonian.hpp"
#include "otto/state.hpp"

namespace otto {

enum class MachineKind { Engine, Heater, Cooler, Indeterminate };

std::string_view to_string(MachineKind kind);

struct ContactPair {
    Contact hot{Contact::Q1};
    Contact cold{Contact::Q1};
};

using Medium = std::variant<SingleQubitLevels, CoupledSystemSpec>;

struct CycleConfig {
    Medium medium{SingleQubitLevels{}};
    bath::BathSpec hot_bath{15.0};
    bath::BathSpec cold_bath{5.0};
    double t_h{50.0};
    double t_c{50.0};
    ContactPair contacts{};  // ignored for a single-qubit medium
    int max_iterations{10000};

    bool coupled() const { return std::holds_alternative<CoupledSystemSpec>(medium); }
    Eigen::Index dim() const { return coupled() ? 4 : 2; }

    /// Throws std::invalid_argument on invalid medium, baths, negative
    /// durations or max_iterations < 1.
    void validate() const;
};

struct StrokeLedger {
    double q_h{0.0};
    double q_c{0.0};
    double w_1{0.0};
    double w_2{0.0};

    double work() const { return w_1 + w_2; }
    /// |Q_h + Q_c + W_1 + W_2|
    double residual() const;
    double min_magnitude() const;
};

/// Ledger magnitudes below this make the stop rule undefined.
inline constexpr double kDegenerateLedgerMagnitude = 1e-14;
/// Relative slack of the stop rule.
inline constexpr double kConvergenceFraction = 1e-2;

enum class ConvergenceCheck { Converged, NotConverged, Degenerate };

/// residual <= min(|Q_h|, |Q_c|, |W_1|, |W_2|) * 1e-2. When the smallest
/// entry is below 1e-14 the ledger is Degenerate once the residual is too,
/// and NotConverged until then.
ConvergenceCheck check_convergence(const StrokeLedger& ledger);

/// The two stroke generators of one parameter point; their propagators are
/// computed once and reused by every cycle iteration.
struct CycleStrokes {
    StrokeGenerator hot;
    StrokeGenerator cold;
};

CycleStrokes build_strokes(const CycleConfig& config);

struct CycleOutcome {
    DensityMatrix state;  // state at the end of step (f)
    StrokeLedger ledger;
};

/// One full cycle from rho0. The state matrix is carried unchanged across
/// the instantaneous work strokes: populations of the old eigenbasis become
/// populations of the new one index by index. Measurement steps dephase in
/// the current eigenbasis.
CycleOutcome run_cycle(const CycleStrokes& strokes, const DensityMatrix& rho0);
CycleOutcome run_cycle(const CycleConfig& config, const DensityMatrix& rho0);

/// Engine iff Q_h > 0, Q_c < 0, W < 0; heater iff Q_h > 0, Q_c < 0, W > 0;
/// cooler iff Q_h < 0, Q_c > 0, W > 0.
MachineKind classify(const StrokeLedger& ledger);

struct Metrics {
    std::optional<double> power;
    std::optional<double> efficiency;  // engines only
    std::optional<double> hcop;        // heaters only
    std::optional<double> ccop;        // coolers only
    double eta_otto{0.0};              // bare working-qubit gaps
    std::optional<double> eta_otto_dressed;  // coupled media: 1 - w~1^c / w~1^h
    double eta_carnot{0.0};
    double eta_ca{0.0};
};

Metrics metrics(const StrokeLedger& ledger, const CycleConfig& config);

enum class CycleStatus { Converged, NonConvergence, DegenerateLedger };

std::string_view to_string(CycleStatus status);

struct LimitCycleResult {
    DensityMatrix state;  // cycle-start state of the final cycle
    int iterations{0};
    StrokeLedger ledger;  // final cycle
    MachineKind kind{MachineKind::Indeterminate};
    Metrics metrics;
    CycleStatus status{CycleStatus::NonConvergence};
    std::vector<double> residuals;  // |sum of ledger| after every cycle

    bool converged() const { return status == CycleStatus::Converged; }
};

/// Starts from the ground state and repeats run_cycle until the stop rule
/// holds. Non-convergence within max_iterations and degenerate ledgers are
/// reported through status, never thrown.
LimitCycleResult iterate_to_limit(const CycleConfig& config);

}  // namespace otto
