#include "sblica/ica.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "sblica/errors.hpp"

namespace sblica {

ObservationMatrix::ObservationMatrix(Eigen::MatrixXd values,
                                     std::vector<std::string> channel_labels)
    : values_(std::move(values)), labels_(std::move(channel_labels)) {
    if (values_.cols() < 2) {
        throw std::invalid_argument("ObservationMatrix: need at least 2 channels, got " +
                                    std::to_string(values_.cols()));
    }
    if (values_.rows() <= values_.cols()) {
        throw std::invalid_argument("ObservationMatrix: need n_samples > n_channels, got " +
                                    std::to_string(values_.rows()) + " x " +
                                    std::to_string(values_.cols()));
    }
    if (!values_.allFinite()) {
        throw std::invalid_argument("ObservationMatrix: non-finite values");
    }
    if (labels_.size() != static_cast<std::size_t>(values_.cols())) {
        throw std::invalid_argument("ObservationMatrix: one label per channel required");
    }
}

bool SeparationResult::all_converged() const {
    for (bool c : converged) {
        if (!c) return false;
    }
    return true;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> center(const Eigen::MatrixXd& x) {
    const Eigen::VectorXd mean = x.colwise().mean();
    return {x.rowwise() - mean.transpose(), mean};
}

std::pair<Eigen::MatrixXd, WhiteningResult> whiten(const Eigen::MatrixXd& centered) {
    const auto n = centered.rows();
    const Eigen::MatrixXd cov =
        centered.transpose() * centered / static_cast<double>(n - 1);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw DegenerateDataError("whiten: eigendecomposition failed");
    }
    const Eigen::VectorXd evals = solver.eigenvalues();  // ascending
    const Eigen::MatrixXd evecs = solver.eigenvectors();
    if (!(evals.minCoeff() >= 1e-12 * evals.maxCoeff()) || !(evals.maxCoeff() > 0.0)) {
        throw DegenerateDataError(
            "whiten: channel covariance is rank-deficient (eigenvalue ratio " +
            std::to_string(evals.minCoeff() / evals.maxCoeff()) + ")");
    }

    WhiteningResult result;
    result.mean = Eigen::VectorXd::Zero(centered.cols());
    result.whitening = evals.cwiseSqrt().cwiseInverse().asDiagonal() * evecs.transpose();
    result.dewhitening = evecs * evals.cwiseSqrt().asDiagonal();
    return {centered * result.whitening.transpose(), result};
}

double kurtosis(std::span<const double> u) {
    if (u.size() < 4) {
        throw std::domain_error("kurtosis: need at least 4 samples, got " +
                                std::to_string(u.size()));
    }
    double m2 = 0.0;
    double m4 = 0.0;
    for (double v : u) {
        if (!std::isfinite(v)) {
            throw std::domain_error("kurtosis: non-finite sample");
        }
        const double v2 = v * v;
        m2 += v2;
        m4 += v2 * v2;
    }
    const double n = static_cast<double>(u.size());
    m2 /= n;
    m4 /= n;
    return m4 - 3.0 * m2 * m2;
}

double kurtosis(const Eigen::VectorXd& u) {
    return kurtosis(std::span<const double>(u.data(), static_cast<std::size_t>(u.size())));
}

namespace {

/// Deterministic uniform in [0,1) from the top 53 bits; the standard
/// library distributions are implementation-defined, these are not.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller; one value per call keeps the draw sequence simple.
    double u1 = uniform01(rng);
    while (u1 <= 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

Eigen::VectorXd random_unit_vector(std::mt19937_64& rng, Eigen::Index dim) {
    Eigen::VectorXd w(dim);
    do {
        for (Eigen::Index i = 0; i < dim; ++i) w(i) = gaussian(rng);
    } while (w.norm() < 1e-12);
    return w / w.norm();
}

}  // namespace

SeparationResult fastica_deflation(const Eigen::MatrixXd& z, int n_components,
                                   const FastIcaOptions& options) {
    const Eigen::Index n = z.rows();
    const Eigen::Index m = z.cols();
    if (n_components < 1 || n_components > m) {
        throw std::invalid_argument("fastica_deflation: n_components must be in [1, n_channels]");
    }

    std::mt19937_64 rng(options.seed);
    SeparationResult result;
    result.unmixing = Eigen::MatrixXd::Zero(m, m);

    for (int p = 0; p < n_components; ++p) {
        Eigen::VectorXd w = random_unit_vector(rng, m);
        // Deflate the initial guess as well, so it starts in the
        // orthogonal complement of the rows already found.
        for (int q = 0; q < p; ++q) {
            w -= w.dot(result.unmixing.row(q)) * result.unmixing.row(q).transpose();
        }
        if (w.norm() > 1e-12) w.normalize();

        bool converged = false;
        int iter = 0;
        while (iter < options.max_iter) {
            ++iter;
            // Kurtosis fixed point: w+ = E{ z (w^T z)^3 } - 3 w
            const Eigen::VectorXd wx = z * w;
            Eigen::VectorXd w_new =
                z.transpose() * wx.array().cube().matrix() / static_cast<double>(n) - 3.0 * w;

            for (int q = 0; q < p; ++q) {
                w_new -= w_new.dot(result.unmixing.row(q)) *
                         result.unmixing.row(q).transpose();
            }
            const double norm = w_new.norm();
            if (norm < 1e-300) {
                break;  // collapsed into the deflated subspace
            }
            w_new /= norm;

            const double overlap = std::abs(w_new.dot(w));
            w = w_new;
            if (overlap > 1.0 - options.tol) {
                converged = true;
                break;
            }
        }
        result.unmixing.row(p) = w.transpose();
        result.iterations_per_component.push_back(iter);
        result.converged.push_back(converged);
    }

    // Fill the remaining rows (if n_components < channels) with an
    // orthonormal completion so the matrix stays invertible.
    for (int p = n_components; p < m; ++p) {
        Eigen::VectorXd w = random_unit_vector(rng, m);
        for (int q = 0; q < p; ++q) {
            w -= w.dot(result.unmixing.row(q)) * result.unmixing.row(q).transpose();
        }
        result.unmixing.row(p) = (w.norm() > 1e-12 ? w.normalized() : w).transpose();
    }

    result.components = z * result.unmixing.transpose();
    result.mixing_estimate = result.unmixing.transpose();  // orthogonal: W^-1 = W^T
    return result;
}

void compose_mixing(SeparationResult& result, const WhiteningResult& whitening) {
    result.mixing_estimate = whitening.dewhitening * result.unmixing.transpose();
}

double amari_index(const Eigen::MatrixXd& p) {
    if (p.rows() != p.cols() || p.rows() < 1) {
        throw std::domain_error("amari_index: square matrix required");
    }
    const Eigen::MatrixXd a = p.cwiseAbs();
    const Eigen::Index n = a.rows();
    double rows = 0.0;
    double cols = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double rmax = a.row(i).maxCoeff();
        const double cmax = a.col(i).maxCoeff();
        if (!(rmax > 0.0)) {
            throw std::domain_error("amari_index: all-zero row " + std::to_string(i));
        }
        if (!(cmax > 0.0)) {
            throw std::domain_error("amari_index: all-zero column " + std::to_string(i));
        }
        rows += a.row(i).sum() / rmax - 1.0;
        cols += a.col(i).sum() / cmax - 1.0;
    }
    return 0.5 * (rows + cols);
}

}  // namespace sblica
