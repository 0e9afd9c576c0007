#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "llafusion/dataset.hpp"
#include "llafusion/delta.hpp"
#include "llafusion/laplace.hpp"

namespace llafusion {

/// Correlation assumed between different classifiers. The within-classifier
/// blocks are always computed from the posterior.
struct CrossPolicy {
  enum class Kind { Zero, SharedScalar };
  Kind kind = Kind::Zero;
  double rho = 0.0;

  static CrossPolicy zero() { return {}; }
  static CrossPolicy shared_scalar(double rho) { return {Kind::SharedScalar, rho}; }
  std::string describe() const;
};

/// Stacked shifted logits ζ̂ ∈ R^{CLM}, classifier-major, with joint covariance R.
struct AggregatedState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
  int classifiers = 0;  // C
  int inputs = 0;       // L
  int classes = 0;      // M
  CrossPolicy policy;

  /// Offset of the (l, c) block: (c·L + l)·M, 0-based indices.
  Eigen::Index offset(int l, int c) const;
  Eigen::VectorXd block_mean(int l, int c) const;
  Eigen::MatrixXd block_cov(int l, int c) const;
  LogitGaussian marginal(int l, int c) const;
};

/// [R_c]_{i,j} = J(x_i)ᵀ P^θ J(x_j).
Eigen::MatrixXd within_classifier_block(const LaplacePosterior& post, const Eigen::VectorXd& x_i,
                                        const Eigen::VectorXd& x_j);

/// Builds ζ̂ and R for C posteriors applied to the rows of `inputs` (L × n_x).
/// Under SharedScalar(ρ) the cross-classifier entry for matching (l, m) is
/// ρ·sqrt(R_aa R_bb) and the full R is projected onto the PSD cone.
AggregatedState aggregate(std::span<const LaplacePosterior> posteriors, const RowMatrix& inputs,
                          const CrossPolicy& policy = CrossPolicy::zero());
AggregatedState aggregate(std::span<const LaplacePosterior> posteriors, const InputSequence& sequence,
                          const CrossPolicy& policy = CrossPolicy::zero());

/// Block-diagonal state from independent logit Gaussians, ordered classifier-major
/// (entry c·L + l).
AggregatedState aggregate_independent(std::span<const LogitGaussian> members, int classifiers, int inputs);

/// z_lc = W_lc ζ for each row of `samples` (K × CLM); returns K × M.
RowMatrix recover(const AggregatedState& state, int l, int c, const RowMatrix& samples);

}  // namespace llafusion
