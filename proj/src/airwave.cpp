#include "sblica/airwave.hpp"

#include <cmath>
#include <stdexcept>

#include "sblica/constants.hpp"

namespace sblica {

AirwaveParams AirwaveParams::from_model(const LayeredModel& model, const Survey& survey,
                                        bool exact_k0) {
    AirwaveParams params;
    params.dipole_moment_am = survey.dipole_moment_am;
    params.azimuth_rad = survey.azimuth_rad;
    params.source_depth_below_surface_m = survey.source_depth_m(model);
    params.receiver_depth_below_surface_m = survey.receiver_depth_or_seafloor(model);
    params.seawater_conductivity_S_per_m = model.seawater_conductivity();
    params.frequency_hz = survey.frequency_hz;
    params.air_wavenumber_per_m = exact_k0 ? exact_air_wavenumber(survey.frequency_hz) : 0.0;
    return params;
}

double exact_air_wavenumber(double frequency_hz) {
    return 2.0 * kPi * frequency_hz * std::sqrt(kMu0 * kEps0);
}

std::complex<double> airwave_field(const AirwaveParams& params, double offset_m) {
    if (!(offset_m > 0.0)) {
        throw std::domain_error("airwave_field: offset must be positive, got " +
                                std::to_string(offset_m));
    }
    const std::complex<double> k =
        complex_wavenumber(params.seawater_conductivity_S_per_m, params.frequency_hz);
    const double depth_sum =
        params.receiver_depth_below_surface_m + params.source_depth_below_surface_m;
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> depth_term = std::exp(i * k * depth_sum);
    const std::complex<double> lateral_term =
        std::exp(i * params.air_wavenumber_per_m * offset_m);
    const double geometry = params.dipole_moment_am * std::cos(params.azimuth_rad) /
                            (2.0 * kPi * params.seawater_conductivity_S_per_m *
                             offset_m * offset_m * offset_m);
    return geometry * depth_term * lateral_term;
}

FieldProfile airwave_profile(const AirwaveParams& params, const std::vector<double>& offsets_m,
                             std::uint64_t fingerprint) {
    std::vector<std::complex<double>> ex;
    ex.reserve(offsets_m.size());
    for (double r : offsets_m) {
        ex.push_back(airwave_field(params, r));
    }
    return FieldProfile(offsets_m, std::move(ex), Provenance::AnalyticAirwave, fingerprint);
}

}  // namespace sblica
