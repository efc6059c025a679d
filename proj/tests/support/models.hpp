#pragma once

// Shared model/survey builders for tests.

#include <limits>
#include <vector>

#include "sblica/model.hpp"

namespace testsupport {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Air / 2000 m seawater (4 S/m) / 500 m sediments (1.5) /
/// 100 m hydrocarbon (0.001) / sediment basement.
inline sblica::LayeredModel fig7_model() {
    return sblica::LayeredModel({{kInf, 1e-11},
                                 {2000.0, 4.0},
                                 {500.0, 1.5},
                                 {100.0, 0.001},
                                 {kInf, 1.5}});
}

/// Shallow 100 m water over a uniform sediment half-space (no reservoir).
inline sblica::LayeredModel shallow_model(double water_depth_m = 100.0) {
    return sblica::LayeredModel({{kInf, 1e-11}, {water_depth_m, 4.0}, {kInf, 1.5}});
}

inline sblica::LayeredModel uniform_model(double sigma = 1.5, double water_depth_m = 2000.0) {
    return sblica::LayeredModel({{kInf, sigma}, {water_depth_m, sigma}, {kInf, sigma}});
}

inline sblica::Survey survey_with_offsets(std::vector<double> offsets) {
    sblica::Survey survey;
    survey.frequency_hz = 0.125;
    survey.source_height_above_seafloor_m = 30.0;
    survey.dipole_moment_am = 1.0;
    survey.azimuth_rad = 0.0;
    survey.offsets_m = std::move(offsets);
    return survey;
}

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) {
        v.push_back(lo + (hi - lo) * i / (n - 1));
    }
    return v;
}

inline std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v;
    v.reserve(n);
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        v.push_back(std::exp(llo + (lhi - llo) * i / (n - 1)));
    }
    return v;
}

}  // namespace testsupport
