#pragma once

#include <Eigen/Core>

#include "llafusion/laplace.hpp"

namespace llafusion {

/// N(ḡ, P^g) over the shifted logits of one (input, classifier) pair.
struct LogitGaussian {
  Eigen::VectorXd mean;  // shifted, max element exactly 0
  Eigen::MatrixXd cov;   // M × M
  int classifier = 0;
  int input = 0;
};

/// Delta-method propagation: mean = shifted logits at θ̂, cov = Jᵀ P^θ J.
/// The shift is a constant translation at the evaluation point, so the
/// covariance is that of the unshifted logits.
LogitGaussian logit_gaussian(const LaplacePosterior& post, const Eigen::VectorXd& x, int input = 0,
                             int classifier = 0);

/// J(a_i)ᵀ P^θ J(a_j) from penultimate activations, exploiting the sparsity
/// of the head Jacobian (cost O(d²) instead of O(d² M)).
Eigen::MatrixXd head_cross_covariance(const Eigen::MatrixXd& cov_theta, const Eigen::VectorXd& a_i,
                                      const Eigen::VectorXd& a_j, int num_classes);

}  // namespace llafusion
