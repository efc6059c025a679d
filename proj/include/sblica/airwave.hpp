#pragma once

#include <complex>
#include <vector>

#include "sblica/field_profile.hpp"
#include "sblica/model.hpp"

namespace sblica {

/// Inputs to the asymptotic airwave expression.
struct AirwaveParams {
    double dipole_moment_am = 1.0;
    double azimuth_rad = 0.0;
    double source_depth_below_surface_m = 0.0;
    double receiver_depth_below_surface_m = 0.0;
    double seawater_conductivity_S_per_m = 4.0;
    double frequency_hz = 0.125;
    /// Wavenumber in air. Zero by default (the quasi-static limit);
    /// set exact_k0 in from_model to carry w*sqrt(mu0 eps0) instead.
    double air_wavenumber_per_m = 0.0;

    static AirwaveParams from_model(const LayeredModel& model, const Survey& survey,
                                    bool exact_k0 = false);
};

/// Exact w*sqrt(mu0 eps0) for sensitivity checks (about 2.6e-9 1/m at
/// 0.125 Hz).
double exact_air_wavenumber(double frequency_hz);

/// p cos(theta) exp[ik(z_r + z_s)] exp[ik0 r] / (2 pi sigma1 r^3).
/// Throws std::domain_error for offset <= 0.
std::complex<double> airwave_field(const AirwaveParams& params, double offset_m);

/// Elementwise airwave_field over an offset grid; provenance
/// AnalyticAirwave.
FieldProfile airwave_profile(const AirwaveParams& params, const std::vector<double>& offsets_m,
                             std::uint64_t fingerprint = 0);

}  // namespace sblica
