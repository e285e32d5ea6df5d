// sweep.cpp: parallel grids, max-power search and the level fit.

#include "otto/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace otto {

void ScanRange::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
        throw std::invalid_argument("scan range must be finite");
    }
    if (step <= 0.0) throw std::invalid_argument("scan step must be > 0");
    if (start > stop) throw std::invalid_argument("scan start must not exceed stop");
}

std::size_t ScanRange::size() const {
    validate();
    return static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
}

std::vector<double> ScanRange::values() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i);
    return out;
}

std::string_view to_string(Axis axis) {
    switch (axis) {
        case Axis::TempRatio: return "temp_ratio";
        case Axis::OmegaRatio: return "omega_ratio";
        case Axis::Omega1C: return "omega1_c";
        case Axis::G: return "g";
    }
    return "temp_ratio";
}

Axis parse_axis(std::string_view name) {
    if (name == "temp_ratio") return Axis::TempRatio;
    if (name == "omega_ratio") return Axis::OmegaRatio;
    if (name == "omega1_c") return Axis::Omega1C;
    if (name == "g") return Axis::G;
    throw std::invalid_argument("unknown axis '" + std::string(name) +
                                "' (expected temp_ratio, omega_ratio, omega1_c or g)");
}

void apply_axis(EngineParameters& params, Axis axis, double value) {
    const bool coupled = is_coupled(params.model);
    switch (axis) {
        case Axis::TempRatio:
            params.temp_ratio = value;
            return;
        case Axis::OmegaRatio:
            if (coupled) throw std::invalid_argument("omega_ratio applies to the single qubit only");
            params.omega_h = value * params.base.omega_c;
            return;
        case Axis::Omega1C:
            if (!coupled) throw std::invalid_argument("omega1_c applies to coupled models only");
            params.omega1_c = value * params.base.omega_c;
            return;
        case Axis::G:
            if (!coupled) throw std::invalid_argument("g applies to coupled models only");
            params.g = value;
            return;
    }
}

void GridSpec::validate() const {
    axis1.range.validate();
    axis2.range.validate();
    if (axis1.axis == axis2.axis) throw std::invalid_argument("grid axes must differ");
    EngineParameters probe = fixed;
    apply_axis(probe, axis1.axis, axis1.range.start);
    apply_axis(probe, axis2.axis, axis2.range.start);
    const double n1 = static_cast<double>(axis1.range.size());
    const double n2 = static_cast<double>(axis2.range.size());
    if (n1 * n2 > static_cast<double>(budget)) {
        throw std::invalid_argument("grid has more points than the budget allows");
    }
}

std::string_view to_string(PointStatus status) {
    switch (status) {
        case PointStatus::Converged: return "converged";
        case PointStatus::NonConvergence: return "non_convergence";
        case PointStatus::DegenerateLedger: return "degenerate_ledger";
        case PointStatus::NonOperational: return "non_operational";
        case PointStatus::Invalid: return "invalid";
    }
    return "invalid";
}

bool PointResult::is_engine() const {
    return status == PointStatus::Converged && cycle && cycle->kind == MachineKind::Engine;
}

std::optional<double> PointResult::power() const {
    if (status != PointStatus::Converged || !cycle) return std::nullopt;
    return cycle->metrics.power;
}

unsigned default_workers() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

PointResult evaluate_point(const EngineParameters& params) {
    PointResult out;
    out.params = params;
    try {
        out.config = build_config(params);
    } catch (const NonOperationalModel& e) {
        out.status = PointStatus::NonOperational;
        out.message = e.what();
        return out;
    } catch (const std::invalid_argument& e) {
        out.status = PointStatus::Invalid;
        out.message = e.what();
        return out;
    }
    out.cycle = iterate_to_limit(*out.config);
    switch (out.cycle->status) {
        case CycleStatus::Converged: out.status = PointStatus::Converged; break;
        case CycleStatus::NonConvergence: out.status = PointStatus::NonConvergence; break;
        case CycleStatus::DegenerateLedger: out.status = PointStatus::DegenerateLedger; break;
    }
    return out;
}

std::vector<PointResult> evaluate_points(std::span<const EngineParameters> points,
                                         unsigned workers) {
    std::vector<PointResult> results(points.size());
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, points.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            results[i] = evaluate_point(points[i]);
        }
    };
    if (workers <= 1) {
        work();
        return results;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();  // joins
    return results;
}

std::vector<PointResult> sweep_grid(const GridSpec& spec, unsigned workers) {
    spec.validate();
    const auto v1 = spec.axis1.range.values();
    const auto v2 = spec.axis2.range.values();
    std::vector<EngineParameters> points;
    points.reserve(v1.size() * v2.size());
    for (double a : v1) {
        for (double b : v2) {
            EngineParameters p = spec.fixed;
            apply_axis(p, spec.axis1.axis, a);
            apply_axis(p, spec.axis2.axis, b);
            points.push_back(p);
        }
    }
    return evaluate_points(points, workers);
}

namespace {

// Argmax of power over converged Engine points; strict > in ascending order
// keeps the smallest parameter on ties.
std::optional<MaxPowerRecord> pick_max(ModelId model, double temp_ratio,
                                       const std::vector<double>& grid,
                                       const std::vector<PointResult>& points) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].is_engine() || !points[i].power()) continue;
        if (!best || *points[i].power() > *points[*best].power()) best = i;
    }
    if (!best) return std::nullopt;
    const PointResult& pm = points[*best];
    MaxPowerRecord rec;
    rec.model = model;
    rec.temp_ratio = temp_ratio;
    rec.p_max = *pm.power();
    rec.eta_at_pm = pm.cycle->metrics.efficiency.value_or(0.0);
    rec.n_at_pm = pm.cycle->iterations;
    rec.g = pm.params.g;
    rec.argmax_level = grid[*best];
    rec.boundary_max = *best == 0 || *best + 1 == grid.size();
    rec.at_pm = pm;
    return rec;
}

MaxPowerRecord require_record(const ScanResult& scan, ModelId model) {
    if (!scan.record) {
        throw NoEnginePoint("no converged engine point on the scan grid for model " +
                            std::string(to_string(model)));
    }
    return *scan.record;
}

}  // namespace

ScanResult scan_level(ModelId model, double temp_ratio, double g, const ScanRange& scan,
                      const BaseParameters& base, unsigned workers) {
    ScanResult out;
    out.grid = scan.values();
    std::vector<EngineParameters> points;
    points.reserve(out.grid.size());
    for (double level : out.grid) {
        EngineParameters p;
        p.model = model;
        p.temp_ratio = temp_ratio;
        p.base = base;
        if (is_coupled(model)) p.g = g;
        apply_axis(p, is_coupled(model) ? Axis::Omega1C : Axis::OmegaRatio, level);
        points.push_back(p);
    }
    out.points = evaluate_points(points, workers);
    out.record = pick_max(model, temp_ratio, out.grid, out.points);
    return out;
}

MaxPowerRecord max_power_over_level(ModelId model, double temp_ratio, double g,
                                    const ScanRange& scan, const BaseParameters& base,
                                    unsigned workers) {
    return require_record(scan_level(model, temp_ratio, g, scan, base, workers), model);
}

ScanResult scan_coupling(ModelId model, double temp_ratio, const ScanRange& scan_g,
                         const BaseParameters& base, unsigned workers) {
    if (!is_coupled(model)) throw std::invalid_argument("coupling scans need a coupled model");
    ScanResult out;
    out.grid = scan_g.values();
    std::vector<EngineParameters> points;
    points.reserve(out.grid.size());
    for (double g : out.grid) {
        EngineParameters p;
        p.model = model;
        p.temp_ratio = temp_ratio;
        p.base = base;
        p.g = g;
        // build_config adds (omega_c/2)(T_h/T_c - 1), which puts Q1's hot
        // gap on the single-qubit max-power level.
        p.omega1_c = base.omega_c;
        points.push_back(p);
    }
    out.points = evaluate_points(points, workers);
    out.record = pick_max(model, temp_ratio, out.grid, out.points);
    if (out.record) {
        out.record->argmax_g = out.record->argmax_level;
        out.record->argmax_level = 1.0;
    }
    return out;
}

MaxPowerRecord max_power_over_coupling(ModelId model, double temp_ratio, const ScanRange& scan_g,
                                       const BaseParameters& base, unsigned workers) {
    return require_record(scan_coupling(model, temp_ratio, scan_g, base, workers), model);
}

LinearFit fit_mpr(std::span<const MaxPowerRecord> records) {
    if (records.size() < 3) throw std::invalid_argument("fit_mpr needs at least 3 records");
    const double n = static_cast<double>(records.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& r : records) {
        sx += r.temp_ratio;
        sy += r.argmax_level;
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& r : records) {
        sxx += (r.temp_ratio - mx) * (r.temp_ratio - mx);
        sxy += (r.temp_ratio - mx) * (r.argmax_level - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_mpr needs two distinct temperature ratios");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (const auto& r : records) {
        const double res = std::abs(r.argmax_level - (fit.intercept + fit.slope * r.temp_ratio));
        fit.max_residual = std::max(fit.max_residual, res);
    }
    return fit;
}

}  // namespace otto
