#pragma once

#include <complex>

#include "sblica/field_profile.hpp"
#include "sblica/model.hpp"

namespace sblica {

/// Closed-form Ex of an x-directed electric dipole in a homogeneous
/// conducting whole-space (quasi-static), at displacement (dx, dy, dz)
/// from the source. Serves as the verification oracle for the layered
/// solver. Throws std::domain_error on zero separation or nonpositive
/// conductivity/frequency.
std::complex<double> wholespace_ex(double conductivity_S_per_m, double frequency_hz,
                                   double dipole_moment_am, double dx_m, double dy_m,
                                   double dz_m);

/// Inline electric field Ex at each survey offset for a horizontally
/// layered model: 1D frequency-domain HED solution via TE/TM
/// reflection-coefficient recursions and the digital Hankel filter.
///
/// The direct (whole-space) part is evaluated in closed form; only the
/// interface-reflected part goes through the filter. Receivers must lie
/// in the seawater layer (boundaries inclusive); the seafloor value is
/// the limit from above.
///
/// Throws std::invalid_argument when validate_model reports violations
/// and InternalError on a Hankel self-test breach.
FieldProfile layered_ex(const LayeredModel& model, const Survey& survey);

}  // namespace sblica
