#include <doctest.h>

#include <cmath>
#include <random>

#include "sblica/constants.hpp"
#include "sblica/model.hpp"
#include "support/models.hpp"
#include "support/random.hpp"

using namespace sblica;
using namespace testsupport;

TEST_CASE("skin depth matches the closed form") {
    // delta = sqrt(2 / (w mu0 sigma)), evaluated by hand for the paper's
    // seawater and sediment conductivities at 0.125 Hz.
    CHECK(skin_depth(4.0, 0.125) == doctest::Approx(711.8).epsilon(1e-3));
    CHECK(skin_depth(4.0, 0.125) == doctest::Approx(711.7625434171771).epsilon(1e-12));
    CHECK(skin_depth(1.5, 0.125) == doctest::Approx(1162.4).epsilon(1e-3));
    CHECK(skin_depth(1.5, 0.125) == doctest::Approx(1162.3033662650946).epsilon(1e-12));
}

TEST_CASE("skin depth scales as sigma^-1/2") {
    const double d1 = skin_depth(1.0, 0.125);
    const double d4 = skin_depth(4.0, 0.125);
    CHECK(d1 / d4 == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("skin depth rejects nonpositive inputs") {
    CHECK_THROWS_AS(skin_depth(0.0, 0.125), std::domain_error);
    CHECK_THROWS_AS(skin_depth(-1.0, 0.125), std::domain_error);
    CHECK_THROWS_AS(skin_depth(4.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(skin_depth(4.0, -0.125), std::domain_error);
}

TEST_CASE("complex wavenumber is (1+i)/delta") {
    const auto k = complex_wavenumber(4.0, 0.125);
    CHECK(k.real() == doctest::Approx(1.405e-3).epsilon(1e-3));
    CHECK(k.real() == k.imag());  // exact by construction

    // |k| doubles when the frequency quadruples
    const auto k4 = complex_wavenumber(4.0, 0.5);
    CHECK(std::abs(k4) / std::abs(k) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("skin_depth * |k| = sqrt(2) across the parameter space") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const double sigma = std::exp(std::log(1e-11) +
                                      uniform01(rng) * (std::log(10.0) - std::log(1e-11)));
        const double f = std::exp(std::log(1e-3) +
                                  uniform01(rng) * (std::log(10.0) - std::log(1e-3)));
        const double product = skin_depth(sigma, f) * std::abs(complex_wavenumber(sigma, f));
        CHECK(product == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("Fig 7 model and survey validate cleanly") {
    const auto model = fig7_model();
    const auto survey = survey_with_offsets(linspace(500.0, 25000.0, 50));
    const auto report = validate_model(model, survey);
    CHECK(report.ok());
    CHECK(report.to_string().empty());
}

TEST_CASE("zero-conductivity layer is reported") {
    auto layers = fig7_model().layers();
    layers[2].conductivity_S_per_m = 0.0;
    const auto report = validate_model(LayeredModel(layers),
                                       survey_with_offsets({1000.0}));
    CHECK_FALSE(report.ok());
    CHECK(report.has("nonpositive_conductivity"));
}

TEST_CASE("source below the seafloor is reported") {
    auto survey = survey_with_offsets({1000.0});
    survey.source_height_above_seafloor_m = -30.0;  // 30 m below seafloor
    const auto report = validate_model(fig7_model(), survey);
    CHECK_FALSE(report.ok());
    CHECK(report.has("source_outside_seawater"));
}

TEST_CASE("source height exceeding the water column is reported") {
    auto survey = survey_with_offsets({1000.0});
    survey.source_height_above_seafloor_m = 2500.0;  // above the sea surface
    const auto report = validate_model(fig7_model(), survey);
    CHECK(report.has("source_outside_seawater"));
}

TEST_CASE("receiver outside the seawater layer is reported") {
    auto survey = survey_with_offsets({1000.0});
    survey.receiver_depth_m = 2300.0;  // inside the sediments
    const auto report = validate_model(fig7_model(), survey);
    CHECK(report.has("receiver_outside_seawater"));
}

TEST_CASE("degenerate layer lists are reported") {
    const auto survey = survey_with_offsets({1000.0});
    CHECK(validate_model(LayeredModel({{kInf, 1e-11}, {kInf, 1.5}}), survey)
              .has("too_few_layers"));

    auto layers = fig7_model().layers();
    layers[2].thickness_m = kInf;  // interior half-space
    CHECK(validate_model(LayeredModel(layers), survey).has("infinite_interior_thickness"));

    layers = fig7_model().layers();
    layers[2].thickness_m = -5.0;
    CHECK(validate_model(LayeredModel(layers), survey).has("nonpositive_thickness"));
}

TEST_CASE("offset list violations are reported") {
    auto survey = survey_with_offsets({});
    CHECK(validate_model(fig7_model(), survey).has("offsets_empty"));

    survey = survey_with_offsets({-100.0, 200.0});
    CHECK(validate_model(fig7_model(), survey).has("nonpositive_offset"));

    survey = survey_with_offsets({200.0, 200.0});
    CHECK(validate_model(fig7_model(), survey).has("offsets_not_increasing"));
}

TEST_CASE("validate_model is pure") {
    auto survey = survey_with_offsets({200.0, 100.0});
    survey.source_height_above_seafloor_m = -1.0;
    const auto a = validate_model(fig7_model(), survey);
    const auto b = validate_model(fig7_model(), survey);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        CHECK(a.violations[i].code == b.violations[i].code);
        CHECK(a.violations[i].detail == b.violations[i].detail);
    }
}

TEST_CASE("interface depths are derived in the sea-surface frame") {
    const auto model = fig7_model();
    const auto depths = model.interface_depths();
    REQUIRE(depths.size() == 4);
    CHECK(depths[0] == 0.0);
    CHECK(depths[1] == 2000.0);
    CHECK(depths[2] == 2500.0);
    CHECK(depths[3] == 2600.0);
    CHECK(model.seafloor_depth_m() == 2000.0);
    CHECK(model.seawater_conductivity() == 4.0);
}
