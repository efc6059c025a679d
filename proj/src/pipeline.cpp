#include "sblica/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sblica/errors.hpp"

namespace sblica {

namespace {

double pearson(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    const Eigen::VectorXd ac = a.array() - a.mean();
    const Eigen::VectorXd bc = b.array() - b.mean();
    const double na = ac.norm();
    const double nb = bc.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return ac.dot(bc) / (na * nb);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::vector<std::complex<double>> to_complex(const Eigen::VectorXd& v) {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) out.emplace_back(v(i), 0.0);
    return out;
}

}  // namespace

WeightedObservation assemble_observations(const FieldProfile& measured,
                                          const FieldProfile& synthetic_air, double weight) {
    if (!(weight > 0.0)) {
        throw std::invalid_argument("assemble_observations: weight must be positive, got " +
                                    std::to_string(weight));
    }
    const auto& ra = measured.offsets_m();
    const auto& rb = synthetic_air.offsets_m();
    if (ra.size() != rb.size()) {
        throw std::invalid_argument(
            "assemble_observations: offset grids differ in length (" +
            std::to_string(ra.size()) + " vs " + std::to_string(rb.size()) + ")");
    }
    for (std::size_t i = 0; i < ra.size(); ++i) {
        if (ra[i] != rb[i]) {
            std::ostringstream os;
            os << "assemble_observations: offset mismatch at index " << i << ": measured "
               << ra[i] << " m vs airwave " << rb[i] << " m";
            throw std::invalid_argument(os.str());
        }
    }

    const auto n = static_cast<Eigen::Index>(ra.size());
    Eigen::MatrixXd values(n, 2);
    const auto ma = measured.magnitudes();
    const auto mb = synthetic_air.magnitudes();
    for (Eigen::Index i = 0; i < n; ++i) {
        values(i, 0) = weight * ma[static_cast<std::size_t>(i)];
        values(i, 1) = weight * mb[static_cast<std::size_t>(i)];
    }
    return WeightedObservation{
        ObservationMatrix(std::move(values), {"measured_ex", "synthetic_airwave"}), weight, ra};
}

FilteredResult separate_airwave(const WeightedObservation& obs, const SeparateOptions& options) {
    Eigen::MatrixXd x = obs.base.values();
    const Eigen::Index n = x.rows();
    if (n < 8) {
        throw std::invalid_argument("separate_airwave: need at least 8 samples, got " +
                                    std::to_string(n));
    }

    if (options.conditioning_noise_rel > 0.0) {
        // Distinct stream from the FastICA initializer so the noise does
        // not shift the component draws.
        std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ull);
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            const double sd = std::sqrt((x.col(j).array() - x.col(j).mean()).square().sum() /
                                        static_cast<double>(n - 1));
            const double level = options.conditioning_noise_rel * (sd > 0.0 ? sd : 1.0);
            for (Eigen::Index i = 0; i < n; ++i) x(i, j) += level * gaussian(rng);
        }
    }

    auto [xc, mean] = center(x);
    auto [z, whitening] = whiten(xc);

    FastIcaOptions ica_options;
    ica_options.max_iter = options.max_iter;
    ica_options.tol = options.tol;
    ica_options.seed = options.seed;
    SeparationResult sep = fastica_deflation(z, 2, ica_options);

    // Identify the airwave component against the (noise-free) synthetic
    // airwave channel, then fix its sign so the correlation is positive.
    const Eigen::VectorXd air_channel = obs.base.values().col(1);
    double best = -1.0;
    int i_air = 0;
    for (int i = 0; i < 2; ++i) {
        const double c = std::abs(pearson(sep.components.col(i), air_channel));
        if (c > best) {
            best = c;
            i_air = i;
        }
    }
    const int i_sig = 1 - i_air;
    if (pearson(sep.components.col(i_air), air_channel) < 0.0) {
        sep.components.col(i_air) *= -1.0;
        sep.unmixing.row(i_air) *= -1.0;
    }
    compose_mixing(sep, whitening);

    // Scale restoration: least-squares fit of the centered measured
    // channel onto the recovered components, then split the DC between
    // signal and airwave by projecting the fitted airwave back onto the
    // synthetic airwave shape.
    Eigen::MatrixXd basis(n, 2);
    basis.col(0) = sep.components.col(i_sig);
    basis.col(1) = sep.components.col(i_air);
    const Eigen::VectorXd beta = basis.colPivHouseholderQr().solve(xc.col(0));

    const Eigen::VectorXd air_c = air_channel.array() - air_channel.mean();
    const double air_var = air_c.squaredNorm();
    const double rho =
        air_var > 0.0 ? beta(1) * sep.components.col(i_air).dot(air_c) / air_var : 0.0;
    const double air_dc = rho * air_channel.mean();

    const Eigen::VectorXd air_w =
        (beta(1) * sep.components.col(i_air)).array() + air_dc;
    const Eigen::VectorXd sig_w =
        (beta(0) * sep.components.col(i_sig)).array() + (mean(0) - air_dc);

    FilteredResult result;
    result.signal = FieldProfile(obs.offsets_m, to_complex(sig_w / obs.weight),
                                 Provenance::SeparatedComponent);
    result.airwave_recovered = FieldProfile(obs.offsets_m, to_complex(air_w / obs.weight),
                                            Provenance::SeparatedComponent);
    result.airwave_component = i_air;
    result.airwave_correlation = pearson(sep.components.col(i_air), air_channel);
    result.scale_factors = {i_sig == 0 ? beta(0) : beta(1), i_sig == 0 ? beta(1) : beta(0)};
    result.diagnostics = std::move(sep);
    result.conditioning_noise_rel = options.conditioning_noise_rel;
    return result;
}

double percent_difference(double candidate_mag, double reference_mag) {
    if (reference_mag == 0.0) {
        throw std::domain_error("percent_difference: zero reference");
    }
    return 100.0 * (candidate_mag - reference_mag) / reference_mag;
}

namespace {

std::size_t nearest_index(const std::vector<double>& offsets, double target) {
    std::size_t best = 0;
    double best_d = std::abs(offsets[0] - target);
    for (std::size_t i = 1; i < offsets.size(); ++i) {
        const double d = std::abs(offsets[i] - target);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace

SweepReport weight_sweep(const FieldProfile& measured, const FieldProfile& synthetic_air,
                         const std::vector<double>& weights,
                         const std::optional<FieldProfile>& reference, OffsetWindow window,
                         const SeparateOptions& options, double depth_m) {
    if (weights.empty()) {
        throw std::invalid_argument("weight_sweep: weights must be nonempty");
    }
    for (double w : weights) {
        if (!(w > 0.0)) {
            throw std::invalid_argument("weight_sweep: weights must be positive, got " +
                                        std::to_string(w));
        }
    }
    if (!(window.stop_m >= window.start_m)) {
        throw std::invalid_argument("weight_sweep: window stop must be >= start");
    }

    std::vector<double> sorted_weights = weights;
    std::sort(sorted_weights.begin(), sorted_weights.end());

    const auto& offsets = measured.offsets_m();
    std::vector<double> report_offsets;
    for (double target : {window.start_m, window.stop_m, 25000.0}) {
        const double r = offsets[nearest_index(offsets, target)];
        if (std::find(report_offsets.begin(), report_offsets.end(), r) ==
            report_offsets.end()) {
            report_offsets.push_back(r);
        }
    }
    std::sort(report_offsets.begin(), report_offsets.end());

    SweepReport report;
    report.window = window;
    report.depth_m = depth_m;

    for (double weight : sorted_weights) {
        const WeightedObservation obs = assemble_observations(measured, synthetic_air, weight);
        FilteredResult res = separate_airwave(obs, options);

        const auto signal_mag = res.signal.magnitudes();
        const auto air_mag = res.airwave_recovered.magnitudes();

        double window_sum = 0.0;
        std::size_t window_count = 0;
        for (std::size_t i = 0; i < offsets.size(); ++i) {
            if (offsets[i] >= window.start_m && offsets[i] <= window.stop_m) {
                window_sum += signal_mag[i];
                ++window_count;
            }
        }
        const double window_mean = window_count > 0 ? window_sum / window_count : 0.0;

        const bool converged = res.diagnostics.all_converged();
        for (double r : report_offsets) {
            const std::size_t i = nearest_index(offsets, r);
            SweepRow row;
            row.weight = weight;
            row.depth_m = depth_m;
            row.offset_m = offsets[i];
            row.signal_mag = signal_mag[i];
            row.airwave_mag = air_mag[i];
            if (reference) {
                const auto& roff = reference->offsets_m();
                const std::size_t j = nearest_index(roff, offsets[i]);
                const double ref_mag = std::abs(reference->ex()[j]);
                if (ref_mag != 0.0) {
                    row.pct_diff_vs_reference = percent_difference(signal_mag[i], ref_mag);
                }
            }
            row.converged = converged;
            report.rows.push_back(row);
        }
        report.entries.push_back(SweepEntry{weight, window_mean, std::move(res)});
    }
    return report;
}

}  // namespace sblica
