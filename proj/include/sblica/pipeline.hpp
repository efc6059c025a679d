#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sblica/field_profile.hpp"
#include "sblica/ica.hpp"

namespace sblica {

/// Two-channel observation: channel 0 = weight * |Ex measured|,
/// channel 1 = weight * |synthetic airwave|, aligned on one offset grid.
struct WeightedObservation {
    ObservationMatrix base;
    double weight;
    std::vector<double> offsets_m;
};

/// Builds the weighted observation. Throws std::invalid_argument when the
/// offset grids differ (message names the first mismatch) or weight <= 0.
WeightedObservation assemble_observations(const FieldProfile& measured,
                                          const FieldProfile& synthetic_air, double weight);

struct SeparateOptions {
    std::uint64_t seed = 1;
    int max_iter = 200;
    double tol = 1e-6;
    /// Optional additive Gaussian conditioning noise, relative to each
    /// channel's standard deviation. Zero disables it.
    double conditioning_noise_rel = 0.0;
};

struct FilteredResult {
    FieldProfile signal;             // airwave-free estimate, physical scale
    FieldProfile airwave_recovered;  // fitted airwave, physical scale
    int airwave_component = -1;      // component index matched to channel 1
    double airwave_correlation = 0.0;
    std::vector<double> scale_factors;  // regression coefficient per component
    SeparationResult diagnostics;
    double conditioning_noise_rel = 0.0;
};

/// The paper's workflow on one weighted observation: center -> whiten ->
/// two-component FastICA; identify the airwave component (argmax |corr|
/// against channel 1), fix its sign, restore physical amplitude by
/// least-squares regression of the measured channel onto the recovered
/// components, and undo the weight.
///
/// Throws DegenerateDataError when whitening degenerates (measured channel
/// identical to the airwave channel). Non-convergence is reported in the
/// diagnostics, not thrown.
FilteredResult separate_airwave(const WeightedObservation& obs, const SeparateOptions& options);

/// 100 * (candidate - reference) / reference.
/// Throws std::domain_error for zero reference.
double percent_difference(double candidate_mag, double reference_mag);

struct OffsetWindow {
    double start_m = 15000.0;
    double stop_m = 25000.0;
};

struct SweepRow {
    double weight;
    double depth_m;
    double offset_m;
    double signal_mag;
    double airwave_mag;
    std::optional<double> pct_diff_vs_reference;
    bool converged;
};

struct SweepEntry {
    double weight;
    double window_mean_signal;
    FilteredResult result;
};

struct SweepReport {
    std::vector<SweepRow> rows;        // sorted by weight, then offset
    std::vector<SweepEntry> entries;   // one per weight
    OffsetWindow window;
    double depth_m = 0.0;
};

/// Runs separate_airwave per weight and reports the windowed mean signal
/// magnitude plus per-offset rows at the window endpoints and at 25 km
/// (percent difference against the reference curve when one is given).
SweepReport weight_sweep(const FieldProfile& measured, const FieldProfile& synthetic_air,
                         const std::vector<double>& weights,
                         const std::optional<FieldProfile>& reference, OffsetWindow window,
                         const SeparateOptions& options, double depth_m);

}  // namespace sblica
