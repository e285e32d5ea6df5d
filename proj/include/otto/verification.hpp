// verification.hpp: self-check suites run by `otto verify` and the tests.
//
// Each suite draws its cases from a fixed-seed generator, so a report is
// reproducible bit for bit.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "otto/state.hpp"

namespace otto::verification {

struct SuiteReport {
    std::string name;
    int passed{0};
    int failed{0};
    double max_error{0.0};
    std::vector<std::string> failures;  // first few failing cases

    bool ok() const { return failed == 0 && passed > 0; }
    void record(bool pass, double error, const std::string& what);
};

/// Random state from a Ginibre matrix: A A^dag / tr(A A^dag).
DensityMatrix random_state(std::mt19937_64& rng, Eigen::Index dim);
/// Random diagonal state (uniform on the simplex).
DensityMatrix random_diagonal_state(std::mt19937_64& rng, Eigen::Index dim);

struct MeasurementTolerances {
    double work{1e-12};
    double commutator{1e-12};
};

/// Compares the storage readout of the clock/storage construction with the
/// negated trace-formula work for random single-qubit and coupled states,
/// both work strokes, and checks [U, H_SE] = 0. Each draw counts once.
SuiteReport measurement_equivalence(int draws = 1000, std::uint64_t seed = 20240607,
                                    const MeasurementTolerances& tol = {});

struct GeneratorTolerances {
    double trace{1e-9};
    double hermiticity{1e-9};
    double positivity{1e-8};
    double gibbs{1e-6};
    double semigroup{1e-9};
};

/// Trace preservation, Hermiticity and positivity of propagated random
/// states, Gibbs fixed points and the semigroup property, for the single
/// qubit and every coupled contact on both strokes.
SuiteReport generator_properties(int states_per_generator = 20, std::uint64_t seed = 20240607,
                                 const GeneratorTolerances& tol = {});

}  // namespace otto::verification
