#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "sblica/airwave.hpp"
#include "sblica/config.hpp"
#include "sblica/constants.hpp"
#include "sblica/csv.hpp"
#include "sblica/emforward.hpp"
#include "sblica/errors.hpp"
#include "sblica/pipeline.hpp"

namespace fs = std::filesystem;
using namespace sblica;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUserError = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string file_hash_hex(const fs::path& path) {
    const std::string bytes = read_file(path);
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<double> weight;
    std::optional<std::string> window;
};

Config load(const CommonArgs& args) {
    return load_config(read_file(args.config_path));
}

RunManifest make_manifest(const std::string& command, const CommonArgs& args,
                          std::uint64_t seed) {
    RunManifest manifest;
    manifest.command = command;
    manifest.config_path = args.config_path;
    manifest.seed = seed;
    manifest.output_dir = args.out_dir;
    manifest.tool_version = kVersion;
    manifest.input_fingerprints.emplace_back("config", file_hash_hex(args.config_path));
    return manifest;
}

OffsetWindow parse_window(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--window expects START,STOP, got '" + text + "'");
    }
    OffsetWindow window;
    window.start_m = std::stod(text.substr(0, comma));
    window.stop_m = std::stod(text.substr(comma + 1));
    if (!(window.stop_m >= window.start_m)) {
        throw std::invalid_argument("--window stop must be >= start");
    }
    return window;
}

int cmd_forward(const CommonArgs& args) {
    const Config cfg = load(args);
    const std::uint64_t seed = args.seed.value_or(cfg.run.seed);
    const FieldProfile profile = layered_ex(cfg.model, cfg.survey);
    write_field_profile_csv(fs::path(args.out_dir) / "forward.csv", profile,
                            make_manifest("forward", args, seed));
    return kExitOk;
}

int cmd_airwave(const CommonArgs& args) {
    const Config cfg = load(args);
    const std::uint64_t seed = args.seed.value_or(cfg.run.seed);
    const AirwaveParams params =
        AirwaveParams::from_model(cfg.model, cfg.survey, cfg.run.exact_air_wavenumber);
    const FieldProfile profile = airwave_profile(
        params, cfg.survey.offsets_m, survey_fingerprint(cfg.model, cfg.survey));
    write_field_profile_csv(fs::path(args.out_dir) / "airwave.csv", profile,
                            make_manifest("airwave", args, seed));
    return kExitOk;
}

SeparateOptions make_separate_options(const Config& cfg, std::uint64_t seed) {
    SeparateOptions options;
    options.seed = seed;
    options.max_iter = cfg.run.max_iter;
    options.tol = cfg.run.tol;
    options.conditioning_noise_rel = cfg.run.conditioning_noise_rel;
    return options;
}

int cmd_separate(const CommonArgs& args, const std::string& measured_path,
                 const std::string& airwave_path) {
    const Config cfg = load(args);
    const std::uint64_t seed = args.seed.value_or(cfg.run.seed);
    const double weight = args.weight.value_or(cfg.run.default_weight);

    const FieldProfile measured = read_field_profile_csv(measured_path);
    const FieldProfile synthetic_air = read_field_profile_csv(airwave_path);
    const WeightedObservation obs = assemble_observations(measured, synthetic_air, weight);
    const FilteredResult result = separate_airwave(obs, make_separate_options(cfg, seed));

    if (!result.diagnostics.all_converged()) {
        std::cerr << "warning: FastICA did not converge for every component\n";
    }

    RunManifest manifest = make_manifest("separate", args, seed);
    manifest.input_fingerprints.emplace_back("measured", file_hash_hex(measured_path));
    manifest.input_fingerprints.emplace_back("airwave", file_hash_hex(airwave_path));
    manifest.notes.push_back("weight: " + format_double(weight));
    manifest.notes.push_back("airwave_component: " + std::to_string(result.airwave_component));
    manifest.notes.push_back("airwave_correlation: " +
                             format_double(result.airwave_correlation));
    manifest.notes.push_back("scale_factors: " + format_double(result.scale_factors[0]) + " " +
                             format_double(result.scale_factors[1]));
    {
        std::string converged = "converged:";
        for (bool c : result.diagnostics.converged) converged += c ? " 1" : " 0";
        manifest.notes.push_back(converged);
        std::string iters = "iterations:";
        for (int i : result.diagnostics.iterations_per_component) {
            iters += " " + std::to_string(i);
        }
        manifest.notes.push_back(iters);
    }
    if (result.conditioning_noise_rel > 0.0) {
        manifest.notes.push_back("conditioning_noise_rel: " +
                                 format_double(result.conditioning_noise_rel));
    }

    write_field_profile_csv(fs::path(args.out_dir) / "signal.csv", result.signal, manifest);
    write_field_profile_csv(fs::path(args.out_dir) / "airwave_recovered.csv",
                            result.airwave_recovered, manifest);
    return kExitOk;
}

int cmd_sweep(const CommonArgs& args, const std::string& measured_path,
              const std::string& airwave_path, const std::string& reference_path) {
    const Config cfg = load(args);
    const std::uint64_t seed = args.seed.value_or(cfg.run.seed);

    const FieldProfile measured = read_field_profile_csv(measured_path);
    const FieldProfile synthetic_air = read_field_profile_csv(airwave_path);
    std::optional<FieldProfile> reference;
    if (!reference_path.empty()) {
        reference = read_field_profile_csv(reference_path);
    }

    OffsetWindow window{cfg.run.window_start_m, cfg.run.window_stop_m};
    if (args.window) window = parse_window(*args.window);

    const SweepReport report =
        weight_sweep(measured, synthetic_air, cfg.run.weights, reference, window,
                     make_separate_options(cfg, seed), cfg.model.seafloor_depth_m());

    RunManifest manifest = make_manifest("sweep", args, seed);
    manifest.input_fingerprints.emplace_back("measured", file_hash_hex(measured_path));
    manifest.input_fingerprints.emplace_back("airwave", file_hash_hex(airwave_path));
    if (!reference_path.empty()) {
        manifest.input_fingerprints.emplace_back("reference", file_hash_hex(reference_path));
    }
    write_sweep_report_csv(fs::path(args.out_dir) / "sweep.csv", report, manifest);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Marine CSEM airwave filtering: layered forward modeling, analytic "
                 "airwave evaluation and kurtosis FastICA separation"};
    app.require_subcommand(1);

    CommonArgs args;
    app.add_option("--config", args.config_path, "configuration JSON")->required();
    app.add_option("--out", args.out_dir, "output directory");
    std::uint64_t seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "RNG seed (overrides config)");
    double weight_value = 0.0;
    auto* weight_opt = app.add_option("--weight", weight_value, "observation weight");
    std::string window_value;
    auto* window_opt = app.add_option("--window", window_value, "offset window START,STOP [m]");

    auto* forward = app.add_subcommand("forward", "layered-earth Ex profile -> forward.csv");
    auto* airwave = app.add_subcommand("airwave", "analytic airwave profile -> airwave.csv");

    std::string measured_path;
    std::string airwave_path;
    std::string reference_path;
    auto* separate = app.add_subcommand(
        "separate", "FastICA airwave separation -> signal.csv, airwave_recovered.csv");
    separate->add_option("measured", measured_path, "measured FieldProfile CSV")->required();
    separate->add_option("airwave", airwave_path, "synthetic airwave CSV")->required();

    auto* sweep = app.add_subcommand("sweep", "weight sweep report -> sweep.csv");
    sweep->add_option("measured", measured_path, "measured FieldProfile CSV")->required();
    sweep->add_option("airwave", airwave_path, "synthetic airwave CSV")->required();
    sweep->add_option("reference", reference_path, "optional reference curve CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUserError;
    }

    if (*seed_opt) args.seed = seed_value;
    if (*weight_opt) args.weight = weight_value;
    if (*window_opt) args.window = window_value;

    try {
        if (*forward) return cmd_forward(args);
        if (*airwave) return cmd_airwave(args);
        if (*separate) return cmd_separate(args, measured_path, airwave_path);
        if (*sweep) return cmd_sweep(args, measured_path, airwave_path, reference_path);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const DegenerateDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUserError;
}
