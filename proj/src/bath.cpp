// bath.cpp: Bose-Einstein occupation, Ohmic density and bath rates.

#include "otto/bath.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace otto::bath {

void BathSpec::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(temperature)) throw std::invalid_argument("bath temperature must be > 0");
    if (!positive(kappa)) throw std::invalid_argument("bath kappa must be > 0");
    if (!positive(cutoff)) throw std::invalid_argument("bath cutoff must be > 0");
    if (!std::isfinite(ohmicity)) throw std::invalid_argument("bath ohmicity must be finite");
}

double bose_einstein(double omega, const BathSpec& bath) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("bose_einstein: frequency must be > 0");
    }
    // expm1 keeps precision when omega << T; a vanishing T gives +inf -> 0.
    return 1.0 / std::expm1(omega / bath.temperature);
}

double ohmic_spectral_density(double omega, const BathSpec& bath) {
    if (!(omega > 0.0)) {
        throw std::invalid_argument("ohmic_spectral_density: frequency must be > 0");
    }
    return bath.kappa * std::pow(omega, bath.ohmicity) /
           std::pow(bath.cutoff, 1.0 - bath.ohmicity) * std::exp(-omega / bath.cutoff);
}

double damping_rate(double omega, const BathSpec& bath) {
    if (omega <= 0.0) return 0.0;
    return 2.0 * std::numbers::pi * ohmic_spectral_density(omega, bath);
}

double spectral_response(double omega, const BathSpec& bath) {
    if (omega == 0.0 || std::isnan(omega)) {
        throw std::invalid_argument("spectral_response: frequency must be nonzero");
    }
    const double w = std::abs(omega);
    const double occupation = bose_einstein(w, bath);
    const double gamma = damping_rate(w, bath);
    return omega > 0.0 ? gamma * (1.0 + occupation) : gamma * occupation;
}

}  // namespace otto::bath
