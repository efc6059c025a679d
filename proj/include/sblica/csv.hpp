#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "sblica/field_profile.hpp"
#include "sblica/pipeline.hpp"

namespace sblica {

/// Run provenance recorded in the header comments of every output file.
struct RunManifest {
    std::string command;
    std::string config_path;
    std::uint64_t seed = 0;
    std::string output_dir;
    std::string tool_version;
    std::vector<std::pair<std::string, std::string>> input_fingerprints;
    std::vector<std::string> notes;

    std::vector<std::string> header_lines() const;
};

/// FieldProfile CSV: '#' header comments (manifest, units, provenance,
/// fingerprint), then `offset_m,ex_real,ex_imag,ex_mag` rows at full
/// double precision.
std::string field_profile_csv(const FieldProfile& profile, const RunManifest& manifest);
void write_field_profile_csv(const std::filesystem::path& path, const FieldProfile& profile,
                             const RunManifest& manifest);

/// Parses a FieldProfile CSV. Provenance is read from the header when
/// present, else ExternalReference. Throws std::invalid_argument with the
/// line number on malformed input.
FieldProfile read_field_profile_csv(const std::filesystem::path& path);

/// Sweep report CSV:
/// `weight,depth_m,offset_m,signal_mag,airwave_mag,pct_diff_vs_reference,converged`
std::string sweep_report_csv(const SweepReport& report, const RunManifest& manifest);
void write_sweep_report_csv(const std::filesystem::path& path, const SweepReport& report,
                            const RunManifest& manifest);

/// Writes to a temporary file in the target directory and renames on
/// success, so failed runs never leave partial outputs.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Full-precision float formatting (17 significant digits) used by all
/// writers, so identical inputs always serialize to identical bytes.
std::string format_double(double v);

}  // namespace sblica
