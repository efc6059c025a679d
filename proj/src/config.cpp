#include "sblica/config.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "sblica/constants.hpp"

namespace sblica {

using nlohmann::json;

std::vector<double> OffsetSpec::expand() const {
    if (!(step_m > 0.0)) {
        throw std::invalid_argument("offsets.step_m must be positive");
    }
    if (!(stop_m >= start_m)) {
        throw std::invalid_argument("offsets.stop_m must be >= offsets.start_m");
    }
    const auto n = static_cast<std::size_t>(std::floor((stop_m - start_m) / step_m + 1e-9)) + 1;
    std::vector<double> offsets;
    offsets.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        offsets.push_back(start_m + static_cast<double>(i) * step_m);
    }
    return offsets;
}

namespace {

const json& require(const json& node, const char* key, const char* section) {
    auto it = node.find(key);
    if (it == node.end()) {
        throw std::invalid_argument(std::string("config: missing '") + key + "' in " + section);
    }
    return *it;
}

double number(const json& node, const char* path) {
    if (!node.is_number()) {
        throw std::invalid_argument(std::string("config: ") + path + " must be a number");
    }
    return node.get<double>();
}

double thickness_value(const json& node, std::size_t index) {
    if (node.is_string()) {
        const auto s = node.get<std::string>();
        if (s == "inf" || s == "infinite") {
            return std::numeric_limits<double>::infinity();
        }
        throw std::invalid_argument("config: layers[" + std::to_string(index) +
                                    "].thickness_m string must be \"inf\"");
    }
    return number(node, "layers[].thickness_m");
}

}  // namespace

Config load_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }

    Config cfg;

    const json& jlayers = require(root, "layers", "config root");
    if (!jlayers.is_array() || jlayers.empty()) {
        throw std::invalid_argument("config: layers must be a nonempty array");
    }
    std::vector<Layer> layers;
    layers.reserve(jlayers.size());
    for (std::size_t i = 0; i < jlayers.size(); ++i) {
        const json& jl = jlayers[i];
        Layer layer;
        layer.thickness_m = thickness_value(require(jl, "thickness_m", "layers[]"), i);
        layer.conductivity_S_per_m = number(require(jl, "conductivity", "layers[]"),
                                            "layers[].conductivity");
        layers.push_back(layer);
    }
    cfg.model = LayeredModel(std::move(layers));

    const json& jsurvey = require(root, "survey", "config root");
    cfg.survey.frequency_hz = number(require(jsurvey, "frequency_hz", "survey"),
                                     "survey.frequency_hz");
    cfg.survey.source_height_above_seafloor_m =
        number(require(jsurvey, "source_height_m", "survey"), "survey.source_height_m");
    cfg.survey.dipole_moment_am =
        jsurvey.contains("dipole_moment")
            ? number(jsurvey["dipole_moment"], "survey.dipole_moment")
            : 1.0;
    cfg.azimuth_deg = jsurvey.contains("azimuth_deg")
                          ? number(jsurvey["azimuth_deg"], "survey.azimuth_deg")
                          : 0.0;
    cfg.survey.azimuth_rad = cfg.azimuth_deg * kPi / 180.0;
    if (jsurvey.contains("receiver_depth_m")) {
        cfg.survey.receiver_depth_m = number(jsurvey["receiver_depth_m"],
                                             "survey.receiver_depth_m");
    }
    const json& joff = require(jsurvey, "offsets", "survey");
    cfg.offsets.start_m = number(require(joff, "start_m", "survey.offsets"),
                                 "survey.offsets.start_m");
    cfg.offsets.stop_m = number(require(joff, "stop_m", "survey.offsets"),
                                "survey.offsets.stop_m");
    cfg.offsets.step_m = number(require(joff, "step_m", "survey.offsets"),
                                "survey.offsets.step_m");
    cfg.survey.offsets_m = cfg.offsets.expand();

    if (root.contains("run")) {
        const json& jrun = root["run"];
        if (jrun.contains("weights")) {
            if (!jrun["weights"].is_array() || jrun["weights"].empty()) {
                throw std::invalid_argument("config: run.weights must be a nonempty array");
            }
            cfg.run.weights.clear();
            for (const auto& w : jrun["weights"]) {
                cfg.run.weights.push_back(number(w, "run.weights[]"));
            }
        }
        if (jrun.contains("seed")) cfg.run.seed = jrun["seed"].get<std::uint64_t>();
        if (jrun.contains("max_iter")) cfg.run.max_iter = jrun["max_iter"].get<int>();
        if (jrun.contains("tol")) cfg.run.tol = number(jrun["tol"], "run.tol");
        if (jrun.contains("default_weight")) {
            cfg.run.default_weight = number(jrun["default_weight"], "run.default_weight");
        }
        if (jrun.contains("window_start_m")) {
            cfg.run.window_start_m = number(jrun["window_start_m"], "run.window_start_m");
        }
        if (jrun.contains("window_stop_m")) {
            cfg.run.window_stop_m = number(jrun["window_stop_m"], "run.window_stop_m");
        }
        if (jrun.contains("conditioning_noise_rel")) {
            cfg.run.conditioning_noise_rel =
                number(jrun["conditioning_noise_rel"], "run.conditioning_noise_rel");
        }
        if (jrun.contains("exact_air_wavenumber")) {
            cfg.run.exact_air_wavenumber = jrun["exact_air_wavenumber"].get<bool>();
        }
    }

    const ValidationReport report = validate_model(cfg.model, cfg.survey);
    if (!report.ok()) {
        throw std::invalid_argument("config: validation failed\n" + report.to_string());
    }
    return cfg;
}

std::string serialize_config(const Config& config) {
    json root;

    json jlayers = json::array();
    for (const Layer& layer : config.model.layers()) {
        json jl;
        if (layer.is_halfspace()) {
            jl["thickness_m"] = "inf";
        } else {
            jl["thickness_m"] = layer.thickness_m;
        }
        jl["conductivity"] = layer.conductivity_S_per_m;
        jlayers.push_back(jl);
    }
    root["layers"] = jlayers;

    json jsurvey;
    jsurvey["frequency_hz"] = config.survey.frequency_hz;
    jsurvey["source_height_m"] = config.survey.source_height_above_seafloor_m;
    jsurvey["dipole_moment"] = config.survey.dipole_moment_am;
    jsurvey["azimuth_deg"] = config.azimuth_deg;
    if (config.survey.receiver_depth_m) {
        jsurvey["receiver_depth_m"] = *config.survey.receiver_depth_m;
    }
    jsurvey["offsets"] = {{"start_m", config.offsets.start_m},
                          {"stop_m", config.offsets.stop_m},
                          {"step_m", config.offsets.step_m}};
    root["survey"] = jsurvey;

    json jrun;
    jrun["weights"] = config.run.weights;
    jrun["seed"] = config.run.seed;
    jrun["max_iter"] = config.run.max_iter;
    jrun["tol"] = config.run.tol;
    jrun["default_weight"] = config.run.default_weight;
    jrun["window_start_m"] = config.run.window_start_m;
    jrun["window_stop_m"] = config.run.window_stop_m;
    jrun["conditioning_noise_rel"] = config.run.conditioning_noise_rel;
    jrun["exact_air_wavenumber"] = config.run.exact_air_wavenumber;
    root["run"] = jrun;

    return root.dump(2) + "\n";
}

}  // namespace sblica
