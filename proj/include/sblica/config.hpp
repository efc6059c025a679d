#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sblica/model.hpp"

namespace sblica {

/// Offset grid as written in configuration files; expanded to the
/// strictly increasing offset list used by Survey.
struct OffsetSpec {
    double start_m = 0.0;
    double stop_m = 0.0;
    double step_m = 0.0;

    std::vector<double> expand() const;
};

/// Run-level options (weights sweep, RNG seed, FastICA controls,
/// far-offset comparison window).
struct RunOptions {
    std::vector<double> weights{1e5, 1e6, 1e7};
    std::uint64_t seed = 1;
    int max_iter = 200;
    double tol = 1e-6;
    double default_weight = 1e6;
    double window_start_m = 15000.0;
    double window_stop_m = 25000.0;
    double conditioning_noise_rel = 0.0;
    bool exact_air_wavenumber = false;
};

struct Config {
    LayeredModel model;
    Survey survey;            // offsets expanded from `offsets` spec
    OffsetSpec offsets;       // kept for canonical serialization
    double azimuth_deg = 0.0; // as written; survey stores radians
    RunOptions run;
};

/// Parses a JSON configuration document and validates the resulting
/// objects. Throws std::invalid_argument with field context on parse
/// errors and with the full validation report when invariants fail.
Config load_config(const std::string& text);

/// Canonical serialized form; load_config(serialize_config(c)) reproduces
/// the same canonical form.
std::string serialize_config(const Config& config);

}  // namespace sblica
