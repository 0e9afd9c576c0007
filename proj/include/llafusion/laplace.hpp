#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>

#include <Eigen/Core>

#include "llafusion/dataset.hpp"
#include "llafusion/network.hpp"
#include "llafusion/pmf.hpp"

namespace llafusion {

/// Gaussian posterior over the last-layer parameters of a frozen network,
/// N(θ̂_last, P^θ). Immutable once built; copies share the model.
class LaplacePosterior {
 public:
  /// Wraps an explicit covariance. Throws NumericalError if it is not PSD.
  static LaplacePosterior from_covariance(MlpClassifier model, Eigen::MatrixXd cov_theta, double prior_variance,
                                          double t_theta);

  const MlpClassifier& model() const { return *model_; }
  std::shared_ptr<const MlpClassifier> model_ptr() const { return model_; }
  const Eigen::VectorXd& theta_hat_last() const { return theta_hat_; }
  const Eigen::MatrixXd& cov_theta() const { return cov_; }
  /// Lower factor S with S Sᵀ = cov_theta.
  const Eigen::MatrixXd& cov_factor() const { return factor_; }
  double prior_variance() const { return prior_variance_; }
  double t_theta() const { return t_theta_; }
  Eigen::Index dim() const { return theta_hat_.size(); }

  /// Same posterior with the covariance rescaled to a different T_θ.
  LaplacePosterior with_t_theta(double t_theta) const;

 private:
  LaplacePosterior() = default;

  std::shared_ptr<const MlpClassifier> model_;
  Eigen::VectorXd theta_hat_;
  Eigen::MatrixXd cov_;
  Eigen::MatrixXd factor_;
  double prior_variance_ = 1.0;
  double t_theta_ = 1.0;
};

/// Σ_n Σ_m f_m(1 − f_m) J_m(x_n) J_m(x_n)ᵀ over the last-layer parameters.
Eigen::MatrixXd fisher_information(const MlpClassifier& model, const LabeledSet& data);

/// P^θ = T_θ · (I_fisher + I/σ₀²)⁻¹ via Cholesky with the jitter ladder.
LaplacePosterior posterior(const MlpClassifier& model, const LabeledSet& data, double prior_variance,
                           double t_theta = 1.0);
LaplacePosterior posterior_from_fisher(const MlpClassifier& model, const Eigen::MatrixXd& fisher,
                                       double prior_variance, double t_theta = 1.0);

/// K × d matrix of draws from N(θ̂_last, P^θ).
RowMatrix sample_parameters(const LaplacePosterior& post, std::int64_t count, std::uint64_t seed);

/// Monte Carlo average of softmax outputs over sampled last-layer parameters.
PmfEstimate parameter_space_pmf(const LaplacePosterior& post, const Eigen::VectorXd& x, std::int64_t count,
                                std::uint64_t seed, bool keep_cloud = false);

struct TThetaFit {
  double t_theta = 1.0;
  double ece = 0.0;
  std::vector<double> grid;
  std::vector<double> grid_ece;
};

enum class TThetaSearch {
  global,       // smallest grid ECE anywhere in [1, 100]
  first_local,  // walk up from T_θ = 1 while the grid ECE strictly decreases
};

/// Grid search for T_θ over 25 log-spaced points in [1, 100] on the
/// validation ECE of the single-posterior Monte Carlo PMF. Common random
/// numbers are shared across grid points. Ties keep the smallest T_θ.
///
/// For large T_θ the sampled logits swamp the mean, accuracy collapses towards
/// chance and the ECE can dip again as confidence falls to match it.
/// `first_local` never crosses such a hump.
TThetaFit fit_t_theta(const LaplacePosterior& post, const LabeledSet& validation, std::int64_t samples,
                      std::uint64_t seed, int bins = 10, TThetaSearch search = TThetaSearch::global);

/// Binary posterior container, layout documented in docs/FORMATS.md.
void save_posterior(const LaplacePosterior& post, const std::filesystem::path& path);
LaplacePosterior load_posterior(const MlpClassifier& model, const std::filesystem::path& path);

}  // namespace llafusion
