#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sblica {

/// Real observation matrix, samples x channels. Requires
/// n_samples > n_channels >= 2 and finite entries.
class ObservationMatrix {
  public:
    ObservationMatrix(Eigen::MatrixXd values, std::vector<std::string> channel_labels);

    const Eigen::MatrixXd& values() const { return values_; }
    const std::vector<std::string>& channel_labels() const { return labels_; }
    Eigen::Index n_samples() const { return values_.rows(); }
    Eigen::Index n_channels() const { return values_.cols(); }

  private:
    Eigen::MatrixXd values_;
    std::vector<std::string> labels_;
};

struct WhiteningResult {
    Eigen::VectorXd mean;              // per channel
    Eigen::MatrixXd whitening;         // channels x channels
    Eigen::MatrixXd dewhitening;       // channels x channels
};

struct SeparationResult {
    Eigen::MatrixXd unmixing;          // W, rows orthonormal in whitened space
    Eigen::MatrixXd mixing_estimate;   // dewhitening * W^T
    Eigen::MatrixXd components;        // samples x channels, Z * W^T
    std::vector<int> iterations_per_component;
    std::vector<bool> converged;

    bool all_converged() const;
};

struct FastIcaOptions {
    int max_iter = 200;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    enum class Nonlinearity { Cubic } nonlinearity = Nonlinearity::Cubic;
};

/// Subtracts the per-channel sample mean. Returns (centered, mean).
std::pair<Eigen::MatrixXd, Eigen::VectorXd> center(const Eigen::MatrixXd& x);

/// Whitens centered data via eigendecomposition of the sample covariance
/// (1/(n-1) normalization). Throws DegenerateDataError when the smallest
/// eigenvalue is below 1e-12 times the largest.
std::pair<Eigen::MatrixXd, WhiteningResult> whiten(const Eigen::MatrixXd& centered);

/// Excess kurtosis E{u^4} - 3 (E{u^2})^2 from sample moments.
/// Throws std::domain_error for fewer than 4 samples.
double kurtosis(std::span<const double> u);
double kurtosis(const Eigen::VectorXd& u);

/// Kurtosis fixed-point FastICA with one-by-one deflation. Input must be
/// whitened. Non-convergence of a component is reported through
/// `converged`, never thrown. mixing_estimate is W^T (whitened space)
/// until composed with a whitening result.
SeparationResult fastica_deflation(const Eigen::MatrixXd& z, int n_components,
                                   const FastIcaOptions& options = {});

/// Sets mixing_estimate = dewhitening * W^T so that
/// components * mixing_estimate^T + mean reproduces the original data.
void compose_mixing(SeparationResult& result, const WhiteningResult& whitening);

/// Cross-talk measure of how far P is from a signed scaled permutation.
/// Normalization: half the sum of row and column cross-talk terms, so a
/// 2x2 all-ones matrix scores exactly 2 and any signed scaled
/// permutation scores 0. Throws std::domain_error on all-zero rows or
/// columns.
double amari_index(const Eigen::MatrixXd& p);

}  // namespace sblica
