// sweep.hpp: parameter grids, maximum-power searches and the linear fit of
// the single-qubit max-power level against the temperature ratio.
//
// Points are independent; they are evaluated on a pool of worker threads and
// gathered back into index order, so results never depend on scheduling.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otto/cycle.hpp"
#include "otto/models.hpp"

namespace otto {

/// Evenly spaced values start, start + step, ... up to stop (inclusive
/// within 1e-9 steps). start == stop gives one value.
struct ScanRange {
    double start{0.0};
    double stop{0.0};
    double step{1.0};

    /// Throws std::invalid_argument unless step > 0, start <= stop, all finite.
    void validate() const;
    std::size_t size() const;
    double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
    std::vector<double> values() const;
};

enum class Axis { TempRatio, OmegaRatio, Omega1C, G };

/// "temp_ratio", "omega_ratio", "omega1_c", "g".
std::string_view to_string(Axis axis);
Axis parse_axis(std::string_view name);

/// Sets one swept parameter. omega_ratio is the single-qubit omega_h/omega_c;
/// omega1_c and g only exist for coupled models. Throws
/// std::invalid_argument for an axis the model does not have.
void apply_axis(EngineParameters& params, Axis axis, double value);

struct GridAxis {
    Axis axis{Axis::TempRatio};
    ScanRange range{};
};

struct GridSpec {
    GridAxis axis1{};
    GridAxis axis2{};
    EngineParameters fixed{};
    std::size_t budget{1'000'000};

    /// Throws std::invalid_argument for bad ranges, repeated axes, axes the
    /// model lacks or a grid larger than budget.
    void validate() const;
};

enum class PointStatus { Converged, NonConvergence, DegenerateLedger, NonOperational, Invalid };

std::string_view to_string(PointStatus status);

struct PointResult {
    EngineParameters params;
    std::optional<CycleConfig> config;      // absent when building failed
    std::optional<LimitCycleResult> cycle;  // absent when building failed
    PointStatus status{PointStatus::Invalid};
    std::string message;

    bool is_engine() const;
    /// Power of a converged point, whatever its machine kind.
    std::optional<double> power() const;
};

/// Number of workers used when a caller passes 0: hardware concurrency.
unsigned default_workers();

/// Builds and iterates every point. Never throws on per-point failures.
std::vector<PointResult> evaluate_points(std::span<const EngineParameters> points,
                                         unsigned workers = 0);
PointResult evaluate_point(const EngineParameters& params);

/// Row-major over (axis1 index, axis2 index).
std::vector<PointResult> sweep_grid(const GridSpec& spec, unsigned workers = 0);

class NoEnginePoint : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MaxPowerRecord {
    ModelId model{ModelId::SingleQubit};
    double temp_ratio{0.0};
    double argmax_level{0.0};          // omega_h/omega_c (single) or omega1_c/omega_c
    std::optional<double> argmax_g;    // coupling scans only
    double g{0.0};                     // coupling at the argmax
    double p_max{0.0};
    double eta_at_pm{0.0};
    int n_at_pm{0};
    bool boundary_max{false};          // argmax on the edge of the scan
    PointResult at_pm;
};

struct ScanResult {
    std::vector<double> grid;
    std::vector<PointResult> points;
    std::optional<MaxPowerRecord> record;  // empty when no point is an engine
};

/// Scans omega_h/omega_c (single) or omega1_c/omega_c (coupled, with the
/// level constraint of build_config). The argmax runs over converged Engine
/// points only; ties go to the smaller level. max_power_over_level throws
/// NoEnginePoint where scan_level leaves the record empty.
ScanResult scan_level(ModelId model, double temp_ratio, double g, const ScanRange& scan,
                      const BaseParameters& base = {}, unsigned workers = 0);
MaxPowerRecord max_power_over_level(ModelId model, double temp_ratio, double g,
                                    const ScanRange& scan, const BaseParameters& base = {},
                                    unsigned workers = 0);

/// Scans g with Q1 pinned to the single-qubit max-power levels
/// (omega1_c = omega_c, omega1_h = (omega_c/2)(1 + T_h/T_c)). Points where
/// the model is non-operational are excluded. max_power_over_coupling throws
/// NoEnginePoint where scan_coupling leaves the record empty.
ScanResult scan_coupling(ModelId model, double temp_ratio, const ScanRange& scan_g,
                         const BaseParameters& base = {}, unsigned workers = 0);
MaxPowerRecord max_power_over_coupling(ModelId model, double temp_ratio, const ScanRange& scan_g,
                                       const BaseParameters& base = {}, unsigned workers = 0);

struct LinearFit {
    double slope{0.0};
    double intercept{0.0};
    double max_residual{0.0};
};

/// Least squares of argmax_level against temp_ratio. Throws
/// std::invalid_argument for fewer than 3 records or a single distinct
/// temperature ratio.
LinearFit fit_mpr(std::span<const MaxPowerRecord> records);

}  // namespace otto
