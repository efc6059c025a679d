#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sblica/model.hpp"

namespace sblica {

enum class Provenance {
    LayeredSolver,
    AnalyticAirwave,
    ExternalReference,
    SeparatedComponent,
};

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Complex inline electric field Ex versus offset.
class FieldProfile {
  public:
    FieldProfile() = default;
    FieldProfile(std::vector<double> offsets_m, std::vector<std::complex<double>> ex,
                 Provenance provenance, std::uint64_t survey_fingerprint = 0);

    const std::vector<double>& offsets_m() const { return offsets_m_; }
    const std::vector<std::complex<double>>& ex() const { return ex_; }
    Provenance provenance() const { return provenance_; }
    std::uint64_t survey_fingerprint() const { return fingerprint_; }

    std::size_t size() const { return offsets_m_.size(); }
    std::vector<double> magnitudes() const;

  private:
    std::vector<double> offsets_m_;
    std::vector<std::complex<double>> ex_;
    Provenance provenance_ = Provenance::ExternalReference;
    std::uint64_t fingerprint_ = 0;
};

/// FNV-1a hash of the canonical model+survey serialization; stamped on
/// every profile so outputs can be traced to their inputs.
std::uint64_t survey_fingerprint(const LayeredModel& model, const Survey& survey);

}  // namespace sblica
