// models.cpp: model identifiers and parameter-to-config mapping.

#include "otto/models.hpp"

#include <cmath>

namespace otto {

std::string_view to_string(ModelId id) {
    switch (id) {
        case ModelId::SingleQubit: return "single";
        case ModelId::M11: return "11";
        case ModelId::M12: return "12";
        case ModelId::M21: return "21";
        case ModelId::M22: return "22";
    }
    return "single";
}

ModelId parse_model(std::string_view name) {
    if (name == "single") return ModelId::SingleQubit;
    if (name == "11") return ModelId::M11;
    if (name == "12") return ModelId::M12;
    if (name == "21") return ModelId::M21;
    if (name == "22") return ModelId::M22;
    throw std::invalid_argument("unknown model '" + std::string(name) +
                                "' (expected single, 11, 12, 21 or 22)");
}

bool is_coupled(ModelId id) { return id != ModelId::SingleQubit; }

ContactPair contacts_of(ModelId id) {
    switch (id) {
        case ModelId::M12: return {Contact::Q1, Contact::Q2};
        case ModelId::M21: return {Contact::Q2, Contact::Q1};
        case ModelId::M22: return {Contact::Q2, Contact::Q2};
        default: return {Contact::Q1, Contact::Q1};
    }
}

double delta_omega(double temp_ratio, double omega_c) {
    return 0.5 * omega_c * (temp_ratio - 1.0);
}

double max_power_level(double temp_ratio, double omega_c) {
    return 0.5 * omega_c * (1.0 + temp_ratio);
}

namespace {

void check_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::invalid_argument(std::string(what) + " must be positive and finite");
    }
}

}  // namespace

CycleConfig build_config(const EngineParameters& p) {
    const BaseParameters& b = p.base;
    check_positive(p.temp_ratio, "temp_ratio");
    check_positive(b.omega_c, "omega_c");
    check_positive(b.temp_c, "T_c");

    CycleConfig cfg;
    cfg.hot_bath = {p.t_hot(), b.kappa, b.cutoff, b.ohmicity};
    cfg.cold_bath = {b.temp_c, b.kappa, b.cutoff, b.ohmicity};
    cfg.t_h = b.duration_h;
    cfg.t_c = b.duration_c;
    cfg.max_iterations = b.max_iterations;

    if (p.model == ModelId::SingleQubit) {
        cfg.medium = SingleQubitLevels{p.omega_h.value_or(max_power_level(p.temp_ratio, b.omega_c)),
                                       b.omega_c};
    } else {
        check_positive(p.omega1_c, "omega1_c");
        if (!std::isfinite(p.g) || p.g < 0.0) {
            throw std::invalid_argument("g must be finite and >= 0");
        }
        if (p.g == 0.0 && p.model != ModelId::M11) {
            throw NonOperationalModel("model " + std::string(to_string(p.model)) +
                                      " cannot operate at g = 0");
        }
        cfg.medium = CoupledSystemSpec{p.omega1_c + delta_omega(p.temp_ratio, b.omega_c),
                                       p.omega1_c, b.omega_c, p.g};
        cfg.contacts = contacts_of(p.model);
    }
    cfg.validate();
    return cfg;
}

double reference_otto_efficiency(const EngineParameters& p) {
    if (p.model == ModelId::SingleQubit) {
        const double wh = p.omega_h.value_or(max_power_level(p.temp_ratio, p.base.omega_c));
        return 1.0 - p.base.omega_c / wh;
    }
    return 1.0 - p.omega1_c / (p.omega1_c + delta_omega(p.temp_ratio, p.base.omega_c));
}

}  // namespace otto
