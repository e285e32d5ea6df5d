// test_models.cpp: model zoo parameter mapping.

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oracles.hpp"
#include "otto/models.hpp"

using namespace otto;

namespace {

EngineParameters engine(ModelId id, double tau, double w1c, double g) {
    EngineParameters p;
    p.model = id;
    p.temp_ratio = tau;
    p.omega1_c = w1c;
    p.g = g;
    return p;
}

}  // namespace

TEST_CASE("model identifiers round-trip") {
    for (ModelId id : {ModelId::SingleQubit, ModelId::M11, ModelId::M12, ModelId::M21, ModelId::M22}) {
        CHECK(parse_model(to_string(id)) == id);
    }
    CHECK_THROWS_AS(parse_model("13"), std::invalid_argument);
    CHECK_THROWS_AS(parse_model(""), std::invalid_argument);
}

TEST_CASE("contacts follow the model name") {
    CHECK(contacts_of(ModelId::M11).hot == Contact::Q1);
    CHECK(contacts_of(ModelId::M11).cold == Contact::Q1);
    CHECK(contacts_of(ModelId::M12).hot == Contact::Q1);
    CHECK(contacts_of(ModelId::M12).cold == Contact::Q2);
    CHECK(contacts_of(ModelId::M21).hot == Contact::Q2);
    CHECK(contacts_of(ModelId::M21).cold == Contact::Q1);
    CHECK(contacts_of(ModelId::M22).hot == Contact::Q2);
    CHECK(contacts_of(ModelId::M22).cold == Contact::Q2);
}

TEST_CASE("coupled config applies the level-shift constraint") {
    EngineParameters p;
    p.model = ModelId::M12;
    p.temp_ratio = 3.1;
    p.omega1_c = 2.5;
    p.g = 0.55;
    const CycleConfig cfg = build_config(p);
    const auto& spec = std::get<CoupledSystemSpec>(cfg.medium);
    CHECK(spec.omega1_h == doctest::Approx(3.55));
    CHECK(spec.omega1_c == 2.5);
    CHECK(spec.omega2 == 1.0);
    CHECK(spec.g == 0.55);
    CHECK(cfg.contacts.hot == Contact::Q1);
    CHECK(cfg.contacts.cold == Contact::Q2);
    CHECK(cfg.hot_bath.temperature == doctest::Approx(15.5));
    CHECK(cfg.cold_bath.temperature == 5.0);
    CHECK(cfg.t_h == 50.0);
    CHECK(cfg.cold_bath.kappa == 0.005);
}

TEST_CASE("level shift is exact for every built config") {
    for (double ratio = 1.1; ratio < 5.0; ratio += 0.13) {
        for (double w1c = 0.5; w1c < 6.0; w1c += 0.45) {
            EngineParameters p = engine(ModelId::M21, ratio, w1c, 0.3);
            const CycleConfig cfg = build_config(p);
            const auto& spec = std::get<CoupledSystemSpec>(cfg.medium);
            // (a + d) - a recovers d only up to rounding of the sum.
            const double ulp = std::numeric_limits<double>::epsilon() * spec.omega1_h;
            CHECK(std::abs((spec.omega1_h - spec.omega1_c) - 0.5 * (ratio - 1.0)) <= 2.0 * ulp);
            CHECK(spec.omega1_h - spec.omega1_c == doctest::Approx(delta_omega(ratio, 1.0)).epsilon(1e-14));
        }
    }
}

TEST_CASE("single-qubit config defaults to the max-power level") {
    EngineParameters p;
    p.temp_ratio = 3.0;
    const CycleConfig cfg = build_config(p);
    const auto& levels = std::get<SingleQubitLevels>(cfg.medium);
    CHECK(levels.omega_h == doctest::Approx(2.0));
    CHECK(levels.omega_c == 1.0);
    p.omega_h = 2.6;
    CHECK(std::get<SingleQubitLevels>(build_config(p).medium).omega_h == 2.6);
    CHECK(max_power_level(3.0, 1.0) == 2.0);
}

TEST_CASE("models 12, 21 and 22 cannot run without coupling") {
    for (ModelId id : {ModelId::M12, ModelId::M21, ModelId::M22}) {
        EngineParameters p = engine(id, 3.0, 2.0, 0.0);
        CHECK_THROWS_AS(build_config(p), NonOperationalModel);
    }
    EngineParameters m11 = engine(ModelId::M11, 3.0, 2.0, 0.0);
    CHECK_NOTHROW(build_config(m11));
}

TEST_CASE("model 11 at g = 0 reproduces the single qubit") {
    for (double w1c : {1.0, 1.5, 2.0, 3.0}) {
        EngineParameters coupled = engine(ModelId::M11, 3.0, w1c, 0.0);
        EngineParameters single;
        single.temp_ratio = 3.0;
        single.omega_h = w1c + delta_omega(3.0, 1.0);
        single.base.omega_c = w1c;
        const LimitCycleResult a = iterate_to_limit(build_config(coupled));
        const LimitCycleResult b = iterate_to_limit(build_config(single));
        CHECK(a.iterations == b.iterations);
        CHECK(std::abs(a.ledger.q_h - b.ledger.q_h) <= 1e-8);
        CHECK(std::abs(a.ledger.q_c - b.ledger.q_c) <= 1e-8);
        CHECK(std::abs(a.ledger.w_1 - b.ledger.w_1) <= 1e-8);
        CHECK(std::abs(a.ledger.w_2 - b.ledger.w_2) <= 1e-8);
    }
}

TEST_CASE("weakly coupled 12, 21 and 22 produce almost no power") {
    for (ModelId id : {ModelId::M12, ModelId::M21, ModelId::M22}) {
        for (double w1c : {1.5, 2.5, 4.0}) {
            EngineParameters p = engine(id, 3.0, w1c, 1e-3);
            const LimitCycleResult r = iterate_to_limit(build_config(p));
            REQUIRE(r.metrics.power);
            CHECK(std::abs(*r.metrics.power) <= 1e-6);
        }
    }
}

TEST_CASE("reference Otto efficiency") {
    EngineParameters single;
    single.omega_h = 2.0;
    CHECK(reference_otto_efficiency(single) == doctest::Approx(0.5));
    EngineParameters coupled = engine(ModelId::M12, 3.1, 2.0, 0.55);
    CHECK(reference_otto_efficiency(coupled) == doctest::Approx(1.0 - 2.0 / 3.05));
    CHECK(reference_otto_efficiency(coupled) == doctest::Approx(0.34426).epsilon(1e-5));
    coupled.omega1_c = 1e9;
    CHECK(reference_otto_efficiency(coupled) < 1e-8);
}

TEST_CASE("invalid engine parameters") {
    EngineParameters p = engine(ModelId::M12, 3.0, -1.0, 0.5);
    CHECK_THROWS_AS(build_config(p), std::invalid_argument);
    p.omega1_c = 1.0;
    p.g = -0.5;
    CHECK_THROWS_AS(build_config(p), std::invalid_argument);
    EngineParameters q;
    q.temp_ratio = 0.0;
    CHECK_THROWS_AS(build_config(q), std::invalid_argument);
    q.temp_ratio = 3.0;
    q.base.kappa = 0.0;
    CHECK_THROWS_AS(build_config(q), std::invalid_argument);
}
