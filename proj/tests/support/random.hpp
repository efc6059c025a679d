#pragma once

// Deterministic sample generators for test data. Independent of the
// library's RNG helpers on purpose: test data must not change if the
// engine's draw order does.

#include <cmath>
#include <cstdint>
#include <random>

namespace testsupport {

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

/// Laplace(0, 1) via inverse CDF (variance 2, excess kurtosis 3).
inline double laplace(std::mt19937_64& rng) {
    const double u = uniform01(rng) - 0.5;
    const double a = 1.0 - 2.0 * std::abs(u);
    return (u < 0.0 ? 1.0 : -1.0) * std::log(a > 0.0 ? a : 1e-300);
}

/// Exponential(1) via inverse CDF (positive, excess kurtosis 6).
inline double exponential(std::mt19937_64& rng) {
    const double u = uniform01(rng);
    return -std::log(u > 0.0 ? 1.0 - u : 1e-300);
}

}  // namespace testsupport
