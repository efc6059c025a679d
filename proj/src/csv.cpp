#include "sblica/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sblica/constants.hpp"

namespace sblica {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> RunManifest::header_lines() const {
    std::vector<std::string> lines;
    lines.push_back("tool: sblica " + (tool_version.empty() ? kVersion : tool_version));
    if (!command.empty()) lines.push_back("command: " + command);
    if (!config_path.empty()) lines.push_back("config: " + config_path);
    lines.push_back("seed: " + std::to_string(seed));
    if (!output_dir.empty()) lines.push_back("out: " + output_dir);
    for (const auto& [name, fp] : input_fingerprints) {
        lines.push_back("input " + name + ": " + fp);
    }
    for (const auto& note : notes) lines.push_back(note);
    return lines;
}

std::string field_profile_csv(const FieldProfile& profile, const RunManifest& manifest) {
    std::ostringstream os;
    for (const auto& line : manifest.header_lines()) os << "# " << line << "\n";
    os << "# provenance: " << to_string(profile.provenance()) << "\n";
    char fp[20];
    std::snprintf(fp, sizeof(fp), "%016llx",
                  static_cast<unsigned long long>(profile.survey_fingerprint()));
    os << "# survey_fingerprint: " << fp << "\n";
    os << "# units: offset_m [m], ex_real/ex_imag/ex_mag [V/m]\n";
    os << "offset_m,ex_real,ex_imag,ex_mag\n";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const auto& v = profile.ex()[i];
        os << format_double(profile.offsets_m()[i]) << "," << format_double(v.real()) << ","
           << format_double(v.imag()) << "," << format_double(std::abs(v)) << "\n";
    }
    return os.str();
}

void write_field_profile_csv(const std::filesystem::path& path, const FieldProfile& profile,
                             const RunManifest& manifest) {
    write_atomic(path, field_profile_csv(profile, manifest));
}

FieldProfile read_field_profile_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }
    std::vector<double> offsets;
    std::vector<std::complex<double>> ex;
    Provenance provenance = Provenance::ExternalReference;
    std::uint64_t fingerprint = 0;

    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string prov_key = "# provenance: ";
            const std::string fp_key = "# survey_fingerprint: ";
            if (line.rfind(prov_key, 0) == 0) {
                provenance = provenance_from_string(line.substr(prov_key.size()));
            } else if (line.rfind(fp_key, 0) == 0) {
                fingerprint = std::stoull(line.substr(fp_key.size()), nullptr, 16);
            }
            continue;
        }
        if (!saw_header) {
            if (line.rfind("offset_m,", 0) != 0) {
                throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                            ": expected 'offset_m,...' header");
            }
            saw_header = true;
            continue;
        }
        std::istringstream ss(line);
        double r = 0.0;
        double re = 0.0;
        double im = 0.0;
        char c1 = 0;
        char c2 = 0;
        if (!(ss >> r >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
            throw std::invalid_argument(path.string() + ":" + std::to_string(lineno) +
                                        ": malformed row '" + line + "'");
        }
        offsets.push_back(r);
        ex.emplace_back(re, im);
    }
    if (!saw_header || offsets.empty()) {
        throw std::invalid_argument(path.string() + ": no data rows");
    }
    return FieldProfile(std::move(offsets), std::move(ex), provenance, fingerprint);
}

std::string sweep_report_csv(const SweepReport& report, const RunManifest& manifest) {
    std::ostringstream os;
    for (const auto& line : manifest.header_lines()) os << "# " << line << "\n";
    os << "# window: " << format_double(report.window.start_m) << " to "
       << format_double(report.window.stop_m) << " m\n";
    for (const auto& entry : report.entries) {
        os << "# window_mean_signal weight=" << format_double(entry.weight) << ": "
           << format_double(entry.window_mean_signal) << "\n";
        if (entry.result.conditioning_noise_rel > 0.0) {
            os << "# conditioning_noise_rel weight=" << format_double(entry.weight) << ": "
               << format_double(entry.result.conditioning_noise_rel) << "\n";
        }
    }
    os << "weight,depth_m,offset_m,signal_mag,airwave_mag,pct_diff_vs_reference,converged\n";
    for (const auto& row : report.rows) {
        os << format_double(row.weight) << "," << format_double(row.depth_m) << ","
           << format_double(row.offset_m) << "," << format_double(row.signal_mag) << ","
           << format_double(row.airwave_mag) << ",";
        if (row.pct_diff_vs_reference) os << format_double(*row.pct_diff_vs_reference);
        os << "," << (row.converged ? "1" : "0") << "\n";
    }
    return os.str();
}

void write_sweep_report_csv(const std::filesystem::path& path, const SweepReport& report,
                            const RunManifest& manifest) {
    write_atomic(path, sweep_report_csv(report, manifest));
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        if (!out.good()) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace sblica
