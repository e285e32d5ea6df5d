// models.hpp: the single-qubit reference engine and the four coupled-qubit
// contact topologies, built from a small set of engine parameters.
//
// Model M<h><c> couples the hot bath to qubit h and the cold bath to qubit
// c. Q1 always carries the work strokes; Q2 keeps the fixed gap omega_c.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "otto/cycle.hpp"

namespace otto {

enum class ModelId { SingleQubit, M11, M12, M21, M22 };

/// Canonical identifiers: "single", "11", "12", "21", "22".
std::string_view to_string(ModelId id);
/// Throws std::invalid_argument for an unknown identifier.
ModelId parse_model(std::string_view name);

bool is_coupled(ModelId id);
ContactPair contacts_of(ModelId id);

/// Raised for M12/M21/M22 at g = 0: one bath then only touches the idle
/// qubit and the machine cannot run.
class NonOperationalModel : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct BaseParameters {
    double omega_c{1.0};
    double temp_c{5.0};  // cold-bath temperature
    double kappa{0.005};
    double cutoff{1000.0};
    double ohmicity{1.0};
    double duration_h{50.0};
    double duration_c{50.0};
    int max_iterations{10000};
};

struct EngineParameters {
    ModelId model{ModelId::SingleQubit};
    double temp_ratio{3.0};   // T_h / T_c
    double omega1_c{1.0};     // coupled: cold gap of Q1
    double g{0.0};            // coupled: XX coupling
    std::optional<double> omega_h;  // single: hot gap; defaults to the max-power level
    BaseParameters base{};

    double t_hot() const { return temp_ratio * base.temp_c; }
};

/// Level shift of Q1 tied to the temperature ratio: (omega_c / 2)(T_h/T_c - 1).
double delta_omega(double temp_ratio, double omega_c);

/// Single-qubit max-power level (omega_c / 2)(1 + T_h/T_c).
double max_power_level(double temp_ratio, double omega_c);

/// Throws std::invalid_argument on invalid parameters and
/// NonOperationalModel for M12/M21/M22 with g == 0.
CycleConfig build_config(const EngineParameters& params);

/// 1 - omega1_c / omega1_h (coupled, bare gaps) or 1 - omega_c / omega_h.
double reference_otto_efficiency(const EngineParameters& params);

}  // namespace otto
