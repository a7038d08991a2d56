#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gsim/optics.hpp"
#include "gsim/stats.hpp"
#include "support.hpp"

using namespace gsim;

namespace {

IsingModel pair_model() { return IsingModel(2, {0.0, 0.5, 0.5, 0.0}); }

SpinState spins(std::initializer_list<double> v) { return SpinState(std::vector<double>(v)); }

}  // namespace

TEST_CASE("analytic_intensity") {
    const std::vector<double> ones{1.0, 1.0};
    CHECK(analytic_intensity(ones, spins({1, 1})).intensity == 4.0);
    CHECK(analytic_intensity(ones, spins({1, -1})).intensity == 0.0);
    const std::vector<double> xi{0.3, -0.7, 0.2};
    CHECK(analytic_intensity(xi, spins({1, 1, -1})).intensity == doctest::Approx(0.36).epsilon(1e-15));
    CHECK_THROWS_AS(analytic_intensity(xi, spins({1, 1})), std::invalid_argument);
}

TEST_CASE("MacropixelConfig") {
    const MacropixelConfig c = MacropixelConfig::for_spins(20);
    CHECK(c.block == 8);
    CHECK(c.grid_rows == 5);
    CHECK(c.grid_cols == 5);
    CHECK(c.pad == 64);
    CHECK(MacropixelConfig::for_spins(16, 4).pad == 16);
    MacropixelConfig bad = c;
    bad.grid_rows = 3;
    CHECK_THROWS_AS(bad.validate(20), std::invalid_argument);
    bad = c;
    bad.pad = 48;
    CHECK_THROWS_AS(bad.validate(20), std::invalid_argument);
}

TEST_CASE("field_intensity") {
    const std::vector<double> ones{1.0, 1.0};
    CHECK(field_intensity(ones, spins({1, 1}), MacropixelConfig::for_spins(2, 4)).intensity ==
          doctest::Approx(4.0).epsilon(1e-12));
    const std::vector<double> zeros(5, 0.0);
    CHECK(field_intensity(zeros, spins({1, -1, 1, 1, -1}), MacropixelConfig::for_spins(5)).intensity == 0.0);

    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = testing::pick(rng, 1, 40);
        std::vector<double> xi(n);
        for (double& v : xi) v = uniform(rng, -2.0, 2.0);
        const SpinState x = SpinState::random(n, rng);
        const double a = analytic_intensity(xi, x).intensity;
        const double f = field_intensity(xi, x, MacropixelConfig::for_spins(n, testing::pick(rng, 1, 8))).intensity;
        CHECK(testing::close_rel(f, a, 1e-6));
    }
}

TEST_CASE("hrv") {
    const EigenBundle b = eigendecompose(pair_model());
    Rng rng(1);
    SUBCASE("single component") {
        // xi = (1/2, 1/2): the frame reads (1/2 + 1/2)^2
        CHECK(hrv(build_ensemble(b, 1), spins({1, 1}), Backend::analytic, NoiseModel::none(), rng) ==
              doctest::Approx(1.0));
        CHECK(hrv(build_ensemble(b, 1), spins({1, -1}), Backend::analytic, NoiseModel::none(), rng) == 0.0);
    }
    SUBCASE("full ensemble equals the quadratic form") {
        CHECK(hrv(build_ensemble(b, 2), spins({1, 1}), Backend::analytic, NoiseModel::none(), rng) ==
              doctest::Approx(1.0));
        CHECK(hrv(build_ensemble(b, 2), spins({1, -1}), Backend::field, NoiseModel::none(), rng) ==
              doctest::Approx(-1.0));
    }
    SUBCASE("level 0 draws nothing") {
        Rng a(5), c(5);
        const HrvEvaluator ev(build_ensemble(b, 2), Backend::analytic, NoiseModel::from_span(0.0, 2.0, 1000));
        CHECK(ev.evaluate(spins({1, 1}), a) == ev.noiseless(spins({1, 1})));
        CHECK(a() == c());
    }
    SUBCASE("noise perturbs around the noiseless value") {
        const HrvEvaluator ev(build_ensemble(b, 2), Backend::analytic, NoiseModel::from_span(0.1, 2.0, 1000));
        CHECK(ev.noise().sigma == doctest::Approx(0.2));
        std::vector<double> draws;
        for (int i = 0; i < 4000; ++i) draws.push_back(ev.evaluate(spins({1, 1}), rng));
        CHECK(mean(draws) == doctest::Approx(1.0).epsilon(0.02));
        CHECK(stddev(draws) == doctest::Approx(0.2).epsilon(0.05));
    }
    SUBCASE("per-frame noise") {
        const HrvEvaluator ev(build_ensemble(b, 2), Backend::analytic,
                              NoiseModel::from_span(0.1, 2.0, 1000, NoiseMode::per_frame));
        std::vector<double> draws;
        for (int i = 0; i < 4000; ++i) draws.push_back(ev.evaluate(spins({1, 1}), rng));
        CHECK(mean(draws) == doctest::Approx(1.0).epsilon(0.02));
        CHECK(stddev(draws) == doctest::Approx(0.2 * std::sqrt(2.0)).epsilon(0.05));
    }
}

TEST_CASE("frame trace") {
    const HrvEvaluator ev(build_ensemble(eigendecompose(pair_model()), 2));
    const std::string csv = ev.frame_trace_csv(spins({1, 1}));
    CHECK(csv.rfind("frame,component,g,intensity\n0,0,1,", 0) == 0);
    CHECK(csv.find("\n1,1,-1,") != std::string::npos);
    const auto fr = ev.frames(spins({1, 1}));
    CHECK(fr[0].intensity == doctest::Approx(1.0));
    CHECK(fr[1].intensity == doctest::Approx(0.0));
}

TEST_CASE("estimate_span") {
    const EigenBundle b = eigendecompose(pair_model());
    Rng rng(4);
    CHECK(estimate_span(build_ensemble(b, 2), Backend::analytic, 200, rng) == doctest::Approx(2.0));
    const EigenBundle z = eigendecompose(IsingModel::zeros(3));
    CHECK(estimate_span(build_ensemble(z, 3), Backend::analytic, 50, rng) == 0.0);
    CHECK_THROWS_AS(estimate_span(build_ensemble(b, 2), Backend::analytic, 1, rng), std::invalid_argument);
    Rng a(6), c(6);
    CHECK(estimate_span(build_ensemble(b, 1), Backend::analytic, 10, a) ==
          estimate_span(build_ensemble(b, 1), Backend::analytic, 10, c));
}

TEST_CASE("backend names") {
    CHECK(parse_backend("analytic") == Backend::analytic);
    CHECK(parse_backend("field") == Backend::field);
    CHECK(backend_name(Backend::field) == "field");
    CHECK_THROWS_AS(parse_backend("laser"), std::invalid_argument);
}
