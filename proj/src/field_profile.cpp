#include "sblica/field_profile.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sblica {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::LayeredSolver: return "layered-solver";
        case Provenance::AnalyticAirwave: return "analytic-airwave";
        case Provenance::ExternalReference: return "external-reference";
        case Provenance::SeparatedComponent: return "separated-component";
    }
    return "external-reference";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "layered-solver") return Provenance::LayeredSolver;
    if (s == "analytic-airwave") return Provenance::AnalyticAirwave;
    if (s == "external-reference") return Provenance::ExternalReference;
    if (s == "separated-component") return Provenance::SeparatedComponent;
    throw std::invalid_argument("unknown provenance: " + s);
}

FieldProfile::FieldProfile(std::vector<double> offsets_m, std::vector<std::complex<double>> ex,
                           Provenance provenance, std::uint64_t survey_fingerprint)
    : offsets_m_(std::move(offsets_m)),
      ex_(std::move(ex)),
      provenance_(provenance),
      fingerprint_(survey_fingerprint) {
    if (offsets_m_.size() != ex_.size()) {
        throw std::invalid_argument("FieldProfile: offsets and field lengths differ (" +
                                    std::to_string(offsets_m_.size()) + " vs " +
                                    std::to_string(ex_.size()) + ")");
    }
    for (std::size_t i = 1; i < offsets_m_.size(); ++i) {
        if (!(offsets_m_[i] > offsets_m_[i - 1])) {
            throw std::invalid_argument("FieldProfile: offsets not strictly increasing at index " +
                                        std::to_string(i));
        }
    }
}

std::vector<double> FieldProfile::magnitudes() const {
    std::vector<double> mags;
    mags.reserve(ex_.size());
    for (const auto& v : ex_) mags.push_back(std::abs(v));
    return mags;
}

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace

std::uint64_t survey_fingerprint(const LayeredModel& model, const Survey& survey) {
    std::ostringstream os;
    os.precision(17);
    for (const Layer& layer : model.layers()) {
        os << layer.thickness_m << "|" << layer.conductivity_S_per_m << ";";
    }
    os << "f=" << survey.frequency_hz << ";h=" << survey.source_height_above_seafloor_m
       << ";p=" << survey.dipole_moment_am << ";az=" << survey.azimuth_rad;
    if (survey.receiver_depth_m) os << ";zr=" << *survey.receiver_depth_m;
    os << ";n=" << survey.offsets_m.size();
    if (!survey.offsets_m.empty()) {
        os << ";r0=" << survey.offsets_m.front() << ";r1=" << survey.offsets_m.back();
    }
    return fnv1a(os.str());
}

}  // namespace sblica
