// test_cycle.cpp: cycle ledger against the rate-equation oracles.

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "otto/cycle.hpp"

using namespace otto;

namespace {

CycleConfig single_config(double wh, double wc, double th, double tc) {
    CycleConfig cfg;
    cfg.medium = SingleQubitLevels{wh, wc};
    cfg.hot_bath = bath::BathSpec{th};
    cfg.cold_bath = bath::BathSpec{tc};
    return cfg;
}

CycleConfig coupled_config(CoupledSystemSpec spec, Contact hot, Contact cold, double th) {
    CycleConfig cfg;
    cfg.medium = spec;
    cfg.hot_bath = bath::BathSpec{th};
    cfg.cold_bath = bath::BathSpec{5.0};
    cfg.contacts = {hot, cold};
    return cfg;
}

}  // namespace

TEST_CASE("stop rule examples") {
    CHECK(check_convergence({1.0, -0.6, -0.5, 0.11}) == ConvergenceCheck::NotConverged);
    CHECK(check_convergence({1.0, -0.5, -1.0, 0.5}) == ConvergenceCheck::Converged);
    CHECK(check_convergence({1.0, -0.5, -1.0, 0.0}) == ConvergenceCheck::NotConverged);
    CHECK(check_convergence({1e-15, -1e-15, 0.0, 0.0}) == ConvergenceCheck::Degenerate);
    CHECK(check_convergence({1.0, -0.5, -1.0 + 4e-3, 0.5}) == ConvergenceCheck::Converged);
    CHECK(check_convergence({1.0, -0.5, -1.0 + 6e-3, 0.5}) == ConvergenceCheck::NotConverged);
}

TEST_CASE("classification examples") {
    CHECK(classify({1.0, -0.5, -0.6, 0.1}) == MachineKind::Engine);
    CHECK(classify({-0.2, 0.5, -0.1, 0.4}) == MachineKind::Cooler);
    CHECK(classify({0.3, -0.5, 0.1, 0.1}) == MachineKind::Heater);
    CHECK(classify({0.3, 0.5, 0.1, 0.1}) == MachineKind::Indeterminate);
    CHECK(classify({1.0, -0.5, -0.3, 0.3}) == MachineKind::Indeterminate);  // W == 0
}

TEST_CASE("classification is a partition of the sign patterns") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 2000; ++k) {
        const StrokeLedger l{u(rng), u(rng), u(rng), u(rng)};
        const double w = l.work();
        const bool engine = l.q_h > 0 && l.q_c < 0 && w < 0;
        const bool heater = l.q_h > 0 && l.q_c < 0 && w > 0;
        const bool cooler = l.q_h < 0 && l.q_c > 0 && w > 0;
        const MachineKind kind = classify(l);
        CHECK((kind == MachineKind::Engine) == engine);
        CHECK((kind == MachineKind::Heater) == heater);
        CHECK((kind == MachineKind::Cooler) == cooler);
        CHECK((kind == MachineKind::Indeterminate) == (!engine && !heater && !cooler));
    }
}

TEST_CASE("metrics examples") {
    const CycleConfig cfg = single_config(2.0, 1.0, 20.0, 5.0);
    const Metrics m = metrics({1.0, -0.5, -0.2, -0.3}, cfg);
    REQUIRE(m.power);
    CHECK(*m.power == doctest::Approx(0.005));
    REQUIRE(m.efficiency);
    CHECK(*m.efficiency == doctest::Approx(0.5));
    CHECK_FALSE(m.hcop);
    CHECK_FALSE(m.ccop);
    CHECK(m.eta_otto == doctest::Approx(0.5));
    CHECK(m.eta_ca == doctest::Approx(0.5));
    CHECK(m.eta_carnot == doctest::Approx(0.75));
    CHECK_FALSE(m.eta_otto_dressed);

    const Metrics heater = metrics({0.3, -0.5, 0.1, 0.1}, cfg);
    REQUIRE(heater.hcop);
    CHECK(*heater.hcop == doctest::Approx(2.5));
    const Metrics cooler = metrics({-0.2, 0.5, -0.1, 0.4}, cfg);
    REQUIRE(cooler.ccop);
    CHECK(*cooler.ccop == doctest::Approx(0.5 / 0.3));

    CycleConfig instant = cfg;
    instant.t_h = instant.t_c = 0.0;
    CHECK_FALSE(metrics({1.0, -0.5, -0.2, -0.3}, instant).power);
}

TEST_CASE("coupled metrics report bare and dressed Otto references") {
    const CycleConfig cfg = coupled_config({3.05, 2.0, 1.0, 0.55}, Contact::Q1, Contact::Q2, 15.5);
    const Metrics m = metrics({1.0, -0.5, -0.6, 0.1}, cfg);
    CHECK(m.eta_otto == doctest::Approx(1.0 - 2.0 / 3.05));
    REQUIRE(m.eta_otto_dressed);
    const double hot = oracle::dress(3.05, 1.0, 0.55).w1t;
    const double cold = oracle::dress(2.0, 1.0, 0.55).w1t;
    CHECK(*m.eta_otto_dressed == doctest::Approx(1.0 - cold / hot));
}

TEST_CASE("single-qubit cycle matches the closed-form two-level cycle") {
    const oracle::Bath hot{15.0};
    const oracle::Bath cold{5.0};
    const CycleConfig cfg = single_config(2.0, 1.0, 15.0, 5.0);
    const CycleOutcome one = run_cycle(cfg, DensityMatrix::ground(2));
    const double ph = oracle::relax(0.0, 2.0, hot, 50.0);
    const double pc = oracle::relax(ph, 1.0, cold, 50.0);
    CHECK(one.ledger.q_h == doctest::Approx(2.0 * ph).epsilon(1e-12));
    CHECK(one.ledger.w_1 == doctest::Approx(-ph).epsilon(1e-12));
    CHECK(one.ledger.q_c == doctest::Approx(pc - ph).epsilon(1e-12));
    CHECK(one.ledger.w_2 == doctest::Approx(pc).epsilon(1e-12));
    CHECK(one.state.population(1) == doctest::Approx(pc).epsilon(1e-12));

    const LimitCycleResult res = iterate_to_limit(cfg);
    const oracle::Ledger ref = oracle::single_cycle(2.0, 1.0, hot, cold, 50.0, 50.0);
    REQUIRE(res.converged());
    CHECK(res.iterations == ref.n);
    CHECK(res.iterations <= 3);
    CHECK(res.ledger.q_h == doctest::Approx(ref.q_h).epsilon(1e-10));
    CHECK(res.ledger.q_c == doctest::Approx(ref.q_c).epsilon(1e-10));
    CHECK(res.ledger.w_1 == doctest::Approx(ref.w_1).epsilon(1e-10));
    CHECK(res.ledger.w_2 == doctest::Approx(ref.w_2).epsilon(1e-10));
    CHECK(res.kind == MachineKind::Engine);
}

TEST_CASE("coupled cycles match the independent dressed-population cycle") {
    const oracle::Bath cold{5.0};
    struct Case {
        CoupledSystemSpec spec;
        Contact hot, cold;
        double th;
    };
    const Case cases[] = {
        {{3.55, 2.5, 1.0, 0.55}, Contact::Q1, Contact::Q2, 15.5},
        {{3.0, 2.0, 1.0, 0.55}, Contact::Q2, Contact::Q1, 15.0},
        {{2.0, 1.0, 1.0, 0.4}, Contact::Q1, Contact::Q1, 15.0},
        {{4.0, 3.0, 1.0, 0.4}, Contact::Q2, Contact::Q2, 15.0},
        {{1.6, 0.6, 1.0, 0.3}, Contact::Q1, Contact::Q2, 15.0},
    };
    for (const Case& c : cases) {
        CycleConfig cfg = coupled_config(c.spec, c.hot, c.cold, c.th);
        const LimitCycleResult res = iterate_to_limit(cfg);
        const oracle::Ledger ref = oracle::coupled_cycle(
            c.spec.omega1_h, c.spec.omega1_c, c.spec.omega2, c.spec.g, oracle::Bath{c.th}, cold,
            c.hot == Contact::Q1, c.cold == Contact::Q1, 50.0, 50.0);
        CHECK(res.converged() == ref.converged);
        CHECK(res.iterations == ref.n);
        const double scale = std::abs(ref.q_h);
        CHECK(std::abs(res.ledger.q_h - ref.q_h) <= 1e-10 * scale);
        CHECK(std::abs(res.ledger.q_c - ref.q_c) <= 1e-10 * scale);
        CHECK(std::abs(res.ledger.w_1 - ref.w_1) <= 1e-10 * scale);
        CHECK(std::abs(res.ledger.w_2 - ref.w_2) <= 1e-10 * scale);
    }
}

TEST_CASE("equal temperatures and equal gaps give an all-zero ledger") {
    const LimitCycleResult res = iterate_to_limit(single_config(1.0, 1.0, 5.0, 5.0));
    CHECK(std::abs(res.ledger.q_h) <= 1e-14);
    CHECK(std::abs(res.ledger.q_c) <= 1e-14);
    CHECK(std::abs(res.ledger.w_1) <= 1e-14);
    CHECK(std::abs(res.ledger.w_2) <= 1e-14);
    CHECK(res.status == CycleStatus::DegenerateLedger);
}

TEST_CASE("equal temperatures with a gap change leave no net work at the limit cycle") {
    const LimitCycleResult res = iterate_to_limit(single_config(2.0, 1.0, 5.0, 5.0));
    REQUIRE(res.converged());
    // Without a temperature difference the cycle cannot produce work.
    CHECK(res.ledger.work() >= 0.0);
    CHECK(res.kind != MachineKind::Engine);
}

TEST_CASE("zero-duration strokes from the ground state give an all-zero ledger") {
    CycleConfig cfg = single_config(2.0, 1.0, 15.0, 5.0);
    cfg.t_h = cfg.t_c = 0.0;
    const CycleOutcome out = run_cycle(cfg, DensityMatrix::ground(2));
    CHECK(out.ledger.q_h == 0.0);
    CHECK(out.ledger.q_c == 0.0);
    CHECK(out.ledger.w_1 == 0.0);
    CHECK(out.ledger.w_2 == 0.0);
    CHECK(iterate_to_limit(cfg).status == CycleStatus::DegenerateLedger);
}

TEST_CASE("non-convergence is reported, not clamped") {
    CycleConfig cfg = single_config(2.0, 1.0, 15.0, 5.0);
    cfg.t_h = cfg.t_c = 0.5;  // far from thermalizing each stroke
    cfg.max_iterations = 3;
    const LimitCycleResult res = iterate_to_limit(cfg);
    CHECK(res.status == CycleStatus::NonConvergence);
    CHECK(res.iterations == 3);
    CHECK(res.residuals.size() == 3);
    cfg.max_iterations = 10000;
    const LimitCycleResult full = iterate_to_limit(cfg);
    CHECK(full.converged());
    CHECK(full.iterations > 3);
}

TEST_CASE("residual shrinks over the iterations") {
    CycleConfig cfg = single_config(2.5, 1.0, 15.0, 5.0);
    cfg.t_h = cfg.t_c = 2.0;
    const LimitCycleResult res = iterate_to_limit(cfg);
    REQUIRE(res.converged());
    for (std::size_t i = 1; i < res.residuals.size(); ++i) {
        CHECK(res.residuals[i] <= res.residuals[i - 1]);
    }
}

TEST_CASE("single-qubit engine efficiency equals the Otto efficiency") {
    for (double wh : {1.3, 1.8, 2.4, 2.9}) {
        const LimitCycleResult res = iterate_to_limit(single_config(wh, 1.0, 15.0, 5.0));
        REQUIRE(res.kind == MachineKind::Engine);
        CHECK(*res.metrics.efficiency == doctest::Approx(1.0 - 1.0 / wh).epsilon(1e-2));
    }
}

TEST_CASE("cycle errors") {
    const CycleConfig cfg = single_config(2.0, 1.0, 15.0, 5.0);
    CHECK_THROWS_AS(run_cycle(cfg, DensityMatrix::ground(4)), std::invalid_argument);
    CycleConfig bad = cfg;
    bad.t_h = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.max_iterations = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = cfg;
    bad.hot_bath.temperature = 0.0;
    CHECK_THROWS_AS(iterate_to_limit(bad), std::invalid_argument);
}

TEST_CASE("iteration result state is the cycle-start state of the final cycle") {
    const CycleConfig cfg = single_config(2.0, 1.0, 15.0, 5.0);
    const LimitCycleResult res = iterate_to_limit(cfg);
    const CycleOutcome again = run_cycle(cfg, res.state);
    CHECK(again.ledger.q_h == doctest::Approx(res.ledger.q_h).epsilon(1e-14));
    CHECK(again.ledger.w_2 == doctest::Approx(res.ledger.w_2).epsilon(1e-14));
}
