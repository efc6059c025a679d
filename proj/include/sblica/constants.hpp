#pragma once

namespace sblica {

inline constexpr double kPi = 3.14159265358979323846;

// Magnetic permeability of vacuum [H/m].
inline constexpr double kMu0 = 4e-7 * kPi;

// Permittivity of vacuum [F/m].
inline constexpr double kEps0 = 8.854e-12;

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sblica
