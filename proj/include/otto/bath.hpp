// bath.hpp: thermal reservoir rate functions (k_B = hbar = 1).

#pragma once

namespace otto::bath {

struct BathSpec {
    double temperature{5.0};
    double kappa{0.005};
    double cutoff{1000.0};  // omega_ct, in units of omega_c
    double ohmicity{1.0};   // exponent s

    /// Throws std::invalid_argument unless temperature, kappa and cutoff are
    /// positive and finite.
    void validate() const;
};

/// 1 / (exp(omega / T) - 1). Requires omega > 0.
double bose_einstein(double omega, const BathSpec& bath);

/// kappa * omega^s / cutoff^(1-s) * exp(-omega / cutoff). Requires omega > 0.
double ohmic_spectral_density(double omega, const BathSpec& bath);

/// 2 pi J(omega) for omega > 0, exactly zero otherwise.
double damping_rate(double omega, const BathSpec& bath);

/// Transition rate G(omega) attached to a dissipator of signed frequency
/// omega: gamma(omega)(1 + n(omega)) for emission (omega > 0) and
/// gamma(|omega|) n(|omega|) for absorption (omega < 0), so that
/// G(-w) = G(w) exp(-w / T). Throws std::invalid_argument for omega == 0.
double spectral_response(double omega, const BathSpec& bath);

}  // namespace otto::bath
