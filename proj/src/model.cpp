#include "sblica/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sblica/constants.hpp"

namespace sblica {

std::vector<double> LayeredModel::interface_depths() const {
    std::vector<double> depths;
    if (layers_.size() < 2) return depths;
    depths.reserve(layers_.size() - 1);
    depths.push_back(0.0);  // air/seawater interface = sea surface
    for (std::size_t i = 1; i + 1 < layers_.size(); ++i) {
        depths.push_back(depths.back() + layers_[i].thickness_m);
    }
    return depths;
}

double LayeredModel::seafloor_depth_m() const {
    if (layers_.size() < 2) return 0.0;
    return layers_[1].thickness_m;
}

double LayeredModel::seawater_conductivity() const {
    if (layers_.size() < 2) return 0.0;
    return layers_[1].conductivity_S_per_m;
}

double Survey::receiver_depth_or_seafloor(const LayeredModel& model) const {
    return receiver_depth_m.value_or(model.seafloor_depth_m());
}

double Survey::source_depth_m(const LayeredModel& model) const {
    return model.seafloor_depth_m() - source_height_above_seafloor_m;
}

bool ValidationReport::has(const std::string& code) const {
    for (const auto& v : violations) {
        if (v.code == code) return true;
    }
    return false;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.code << ": " << v.detail << "\n";
    }
    return os.str();
}

namespace {

void add(ValidationReport& report, std::string code, std::string detail) {
    report.violations.push_back({std::move(code), std::move(detail)});
}

}  // namespace

ValidationReport validate_model(const LayeredModel& model, const Survey& survey) {
    ValidationReport report;
    const auto& layers = model.layers();

    if (layers.size() < 3) {
        add(report, "too_few_layers",
            "model needs at least air, seawater and sediment layers, got " +
                std::to_string(layers.size()));
        return report;  // nothing below is meaningful
    }

    for (std::size_t i = 0; i < layers.size(); ++i) {
        const Layer& layer = layers[i];
        if (!(layer.conductivity_S_per_m > 0.0) || !std::isfinite(layer.conductivity_S_per_m)) {
            add(report, "nonpositive_conductivity",
                "layer " + std::to_string(i) + " has conductivity " +
                    std::to_string(layer.conductivity_S_per_m) + " S/m");
        }
        const bool interior = i > 0 && i + 1 < layers.size();
        if (interior && layer.is_halfspace()) {
            add(report, "infinite_interior_thickness",
                "layer " + std::to_string(i) + " is an interior layer with infinite thickness");
        }
        if (!layer.is_halfspace() && !(layer.thickness_m > 0.0)) {
            add(report, "nonpositive_thickness",
                "layer " + std::to_string(i) + " has thickness " +
                    std::to_string(layer.thickness_m) + " m");
        }
    }

    if (!(survey.frequency_hz > 0.0)) {
        add(report, "nonpositive_frequency",
            "frequency " + std::to_string(survey.frequency_hz) + " Hz");
    }
    if (!(survey.dipole_moment_am > 0.0)) {
        add(report, "nonpositive_dipole_moment",
            "dipole moment " + std::to_string(survey.dipole_moment_am) + " Am");
    }
    if (!(survey.source_height_above_seafloor_m > 0.0)) {
        add(report, "nonpositive_source_height",
            "source height " + std::to_string(survey.source_height_above_seafloor_m) + " m");
    }

    const double water = model.seafloor_depth_m();
    if (std::isfinite(water) && water > 0.0) {
        const double zs = survey.source_depth_m(model);
        if (!(zs > 0.0) || !(zs < water)) {
            add(report, "source_outside_seawater",
                "source depth " + std::to_string(zs) + " m not inside seawater (0, " +
                    std::to_string(water) + ")");
        }
        const double zr = survey.receiver_depth_or_seafloor(model);
        if (!(zr >= 0.0) || !(zr <= water)) {
            add(report, "receiver_outside_seawater",
                "receiver depth " + std::to_string(zr) + " m not within seawater [0, " +
                    std::to_string(water) + "]");
        }
    }

    if (survey.offsets_m.empty()) {
        add(report, "offsets_empty", "offset list is empty");
    }
    for (std::size_t i = 0; i < survey.offsets_m.size(); ++i) {
        if (!(survey.offsets_m[i] > 0.0)) {
            add(report, "nonpositive_offset",
                "offset[" + std::to_string(i) + "] = " + std::to_string(survey.offsets_m[i]));
            break;
        }
        if (i > 0 && !(survey.offsets_m[i] > survey.offsets_m[i - 1])) {
            add(report, "offsets_not_increasing",
                "offset[" + std::to_string(i) + "] does not increase");
            break;
        }
    }

    return report;
}

double skin_depth(double conductivity_S_per_m, double frequency_hz) {
    if (!(conductivity_S_per_m > 0.0)) {
        throw std::domain_error("skin_depth: conductivity must be positive, got " +
                                std::to_string(conductivity_S_per_m));
    }
    if (!(frequency_hz > 0.0)) {
        throw std::domain_error("skin_depth: frequency must be positive, got " +
                                std::to_string(frequency_hz));
    }
    const double omega = 2.0 * kPi * frequency_hz;
    return std::sqrt(2.0 / (omega * kMu0 * conductivity_S_per_m));
}

std::complex<double> complex_wavenumber(double conductivity_S_per_m, double frequency_hz) {
    const double inv_delta = 1.0 / skin_depth(conductivity_S_per_m, frequency_hz);
    return {inv_delta, inv_delta};
}

}  // namespace sblica
