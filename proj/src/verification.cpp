// verification.cpp: randomized self-check suites.

#include "otto/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "otto/dynamics.hpp"
#include "otto/measurement.hpp"

namespace otto::verification {

namespace {

constexpr std::size_t kMaxListedFailures = 10;

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::string describe(const char* what, double value) {
    std::ostringstream os;
    os.precision(17);
    os << what << " = " << value;
    return os.str();
}

double frame_energy(std::span<const double> levels, const DensityMatrix& rho) {
    double e = 0.0;
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
        e += levels[static_cast<std::size_t>(i)] * rho.population(i);
    }
    return e;
}

}  // namespace

void SuiteReport::record(bool pass, double error, const std::string& what) {
    max_error = std::max(max_error, error);
    if (pass) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < kMaxListedFailures) failures.push_back(what);
}

DensityMatrix random_state(std::mt19937_64& rng, Eigen::Index dim) {
    std::normal_distribution<double> normal;
    linalg::Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = {normal(rng), normal(rng)};
    }
    linalg::Matrix rho = a * a.adjoint();
    rho /= rho.trace();
    return DensityMatrix{0.5 * (rho + rho.adjoint())};
}

DensityMatrix random_diagonal_state(std::mt19937_64& rng, Eigen::Index dim) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(static_cast<std::size_t>(dim));
    double total = 0.0;
    for (auto& x : p) total += (x = expo(rng));
    for (auto& x : p) x /= total;
    return DensityMatrix::from_populations(p);
}

SuiteReport measurement_equivalence(int draws, std::uint64_t seed,
                                    const MeasurementTolerances& tol) {
    using measurement::WorkDirection;
    SuiteReport report;
    report.name = "measurement_equivalence";
    std::mt19937_64 rng(seed);

    for (int k = 0; k < draws; ++k) {
        const auto direction = k % 2 == 0 ? WorkDirection::Expand : WorkDirection::Compress;
        double err = 0.0;
        double comm = 0.0;

        if (k % 4 < 2) {
            const double wc = uniform(rng, 0.2, 3.0);
            const SingleQubitLevels levels{wc + uniform(rng, 0.0, 3.0), wc};
            const DensityMatrix rho = random_state(rng, 2);
            const double extracted = measurement::single_qubit_extracted_work(rho, levels, direction);
            // Trace formula: W = tr[rho (H_final - H_initial)].
            const double wh = levels.omega_h;
            const double w_trace = direction == WorkDirection::Expand
                                       ? (levels.omega_c - wh) * rho.population(1)
                                       : (wh - levels.omega_c) * rho.population(1);
            err = std::abs(extracted + w_trace);
            comm = measurement::verify_energy_conservation_of_unitary(
                measurement::single_qubit_setup(levels, direction));
        } else {
            CoupledSystemSpec spec;
            spec.omega1_c = uniform(rng, 0.2, 4.0);
            spec.omega1_h = spec.omega1_c + uniform(rng, 0.0, 3.0);
            spec.omega2 = uniform(rng, 0.2, 3.0);
            spec.g = uniform(rng, 0.0, 1.5);
            const DressedFrame hot = dress(spec, Stroke::Hot);
            const DressedFrame cold = dress(spec, Stroke::Cold);
            const DensityMatrix rho = random_diagonal_state(rng, 4);

            const auto setup = measurement::coupled_setup(hot, cold, direction);
            const double readout = measurement::measure_storage(setup, rho.populations()).storage_energy;
            const double closed = measurement::coupled_extracted_work(
                rho, hot, cold, {spec.omega1_h, spec.omega1_c, spec.omega2}, direction);
            const auto eh = hot.energies();
            const auto ec = cold.energies();
            const double w_trace = direction == WorkDirection::Expand
                                       ? frame_energy(ec, rho) - frame_energy(eh, rho)
                                       : frame_energy(eh, rho) - frame_energy(ec, rho);
            err = std::max(std::abs(readout + w_trace), std::abs(closed + w_trace));
            comm = measurement::verify_energy_conservation_of_unitary(setup);
        }
        const bool pass = err <= tol.work && comm <= tol.commutator;
        report.record(pass, std::max(err, comm),
                      "draw " + std::to_string(k) + ": " + describe("work error", err) + ", " +
                          describe("commutator", comm));
    }
    return report;
}

namespace {

struct NamedGenerator {
    std::string name;
    StrokeGenerator gen;
    double temperature;
};

std::vector<NamedGenerator> reference_generators() {
    std::vector<NamedGenerator> out;
    const bath::BathSpec hot{15.0};
    const bath::BathSpec cold{5.0};
    const SingleQubitLevels levels{2.0, 1.0};
    out.push_back({"single/hot", local_liouvillian(levels, Stroke::Hot, hot, 50.0), hot.temperature});
    out.push_back({"single/cold", local_liouvillian(levels, Stroke::Cold, cold, 50.0), cold.temperature});

    const CoupledSystemSpec specs[] = {{3.5, 2.5, 1.0, 0.55}, {2.0, 1.0, 1.0, 0.4}, {2.0, 1.0, 1.0, 0.0}};
    for (const auto& spec : specs) {
        for (Contact contact : {Contact::Q1, Contact::Q2}) {
            const std::string tag = std::string(contact == Contact::Q1 ? "Q1" : "Q2") + "/g=" +
                                    std::to_string(spec.g);
            out.push_back({"coupled/hot/" + tag,
                           global_liouvillian(spec, Stroke::Hot, hot, contact, 50.0),
                           hot.temperature});
            out.push_back({"coupled/cold/" + tag,
                           global_liouvillian(spec, Stroke::Cold, cold, contact, 50.0),
                           cold.temperature});
        }
    }
    return out;
}

}  // namespace

SuiteReport generator_properties(int states_per_generator, std::uint64_t seed,
                                 const GeneratorTolerances& tol) {
    SuiteReport report;
    report.name = "generator_properties";
    std::mt19937_64 rng(seed);

    for (const auto& [name, gen, temperature] : reference_generators()) {
        for (int k = 0; k < states_per_generator; ++k) {
            const DensityMatrix rho = random_state(rng, gen.dim());
            const linalg::Matrix out = evolve(gen, rho).matrix();
            const double trace_err = std::abs(out.trace() - linalg::Complex{1.0, 0.0});
            const double herm_err = linalg::max_abs(out - out.adjoint());
            const double min_eig = linalg::min_eigenvalue(0.5 * (out + out.adjoint()));
            const bool pass = trace_err <= tol.trace && herm_err <= tol.hermiticity &&
                              min_eig >= -tol.positivity;
            report.record(pass, std::max(trace_err, herm_err),
                          name + " state " + std::to_string(k) + ": " +
                              describe("trace error", trace_err) + ", " +
                              describe("hermiticity", herm_err) + ", " +
                              describe("min eigenvalue", min_eig));
        }

        // Gibbs state of the frame Hamiltonian at the bath temperature.
        const auto e = gen.energies();
        std::vector<double> p(e.size());
        double z = 0.0;
        for (std::size_t i = 0; i < e.size(); ++i) z += (p[i] = std::exp(-e[i] / temperature));
        for (auto& x : p) x /= z;
        const DensityMatrix gibbs = DensityMatrix::from_populations(p);
        const DensityMatrix after = evolve(gen, gibbs);
        const double gibbs_err = (after.populations() - gibbs.populations()).cwiseAbs().maxCoeff();
        report.record(gibbs_err <= tol.gibbs, gibbs_err,
                      name + ": " + describe("Gibbs population drift", gibbs_err));

        // exp(L t1) exp(L t2) = exp(L (t1 + t2)).
        const StrokeGenerator a = gen.with_duration(17.0);
        const StrokeGenerator b = gen.with_duration(33.0);
        const double semi_err = linalg::max_abs(a.propagator() * b.propagator() - gen.propagator());
        report.record(semi_err <= tol.semigroup, semi_err,
                      name + ": " + describe("semigroup error", semi_err));
    }
    return report;
}

}  // namespace otto::verification
