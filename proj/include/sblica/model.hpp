#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sblica {

/// One horizontal layer. Half-spaces (first and last layer only) carry
/// infinite thickness.
struct Layer {
    double thickness_m = std::numeric_limits<double>::infinity();
    double conductivity_S_per_m = 0.0;

    bool is_halfspace() const { return std::isinf(thickness_m); }
};

/// Ordered conductivity stack, air (top) to basement (bottom).
///
/// Depth frame: z positive down, z = 0 at the sea surface (air/seawater
/// interface). Layer 0 is always treated as the air half-space; its
/// declared thickness never enters the physics.
class LayeredModel {
  public:
    LayeredModel() = default;
    explicit LayeredModel(std::vector<Layer> layers) : layers_(std::move(layers)) {}

    const std::vector<Layer>& layers() const { return layers_; }
    std::size_t size() const { return layers_.size(); }

    /// Interface depths below the sea surface, strictly increasing:
    /// [0, water bottom, ...]. Size = layers - 1 for a well-formed model.
    std::vector<double> interface_depths() const;

    /// Depth of the seafloor (bottom of the seawater layer).
    double seafloor_depth_m() const;

    double seawater_conductivity() const;

  private:
    std::vector<Layer> layers_;
};

/// Acquisition geometry and source parameters.
struct Survey {
    double frequency_hz = 0.125;
    double source_height_above_seafloor_m = 30.0;
    /// Depth below sea surface; receivers sit on the seafloor when unset.
    std::optional<double> receiver_depth_m;
    double dipole_moment_am = 1.0;
    double azimuth_rad = 0.0;
    std::vector<double> offsets_m;

    double receiver_depth_or_seafloor(const LayeredModel& model) const;
    double source_depth_m(const LayeredModel& model) const;
};

struct Violation {
    std::string code;    // machine-readable, snake_case
    std::string detail;  // human-readable context
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const;
    std::string to_string() const;
};

/// Checks every type invariant of (model, survey). Violations are data,
/// not exceptions; an empty report means the pair is valid.
ValidationReport validate_model(const LayeredModel& model, const Survey& survey);

/// Electromagnetic skin depth sqrt(2 / (w mu0 sigma)) [m].
/// Throws std::domain_error on nonpositive inputs.
double skin_depth(double conductivity_S_per_m, double frequency_hz);

/// Complex low-frequency wavenumber k = (1 + i) / skin_depth [1/m].
std::complex<double> complex_wavenumber(double conductivity_S_per_m, double frequency_hz);

}  // namespace sblica
