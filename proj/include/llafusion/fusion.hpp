#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "llafusion/aggregate.hpp"
#include "llafusion/pmf.hpp"

namespace llafusion {

struct FusedGaussian {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

FusedGaussian as_fused(const LogitGaussian& g);

/// Information-form fusion of the stacked state with H = [I_M; …; I_M]:
/// P = (Hᵀ R⁻¹ H)⁻¹, mean = P Hᵀ R⁻¹ ζ̂, all solves through Cholesky.
FusedGaussian fuse_information(const AggregatedState& state);

/// Draws K vectors from N(mean, cov) in a fixed order. Both mc_pmf and
/// ella_pmf go through this so they share one sampling path.
void draw_gaussian(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov, std::int64_t count, std::uint64_t seed,
                   const std::function<void(std::int64_t, const Eigen::VectorXd&)>& visit);

/// Monte Carlo softmax marginalization of a logit Gaussian.
PmfEstimate mc_pmf(const FusedGaussian& g, std::int64_t count, std::uint64_t seed, bool keep_cloud = false);

/// eLLA: draws ζ ~ N(ζ̂, R), forms z = Σ_lc w_lc W_lc ζ per draw, and
/// softmax-averages. `weights` are ordered classifier-major like the state.
PmfEstimate ella_pmf(const AggregatedState& state, std::span<const double> weights, std::int64_t count,
                     std::uint64_t seed, bool keep_cloud = false);

std::vector<double> uniform_weights(const AggregatedState& state);
/// w_lc ∝ 1 / trace(P^g_lc).
std::vector<double> inverse_trace_weights(const AggregatedState& state);

/// Normalized elementwise product, computed in log space.
Eigen::VectorXd product_fusion(std::span<const Eigen::VectorXd> pmfs);

/// Normalized Π p_i^{w_i}, computed in log space.
Eigen::VectorXd log_linear_pool(std::span<const Eigen::VectorXd> pmfs, std::span<const double> weights);

}  // namespace llafusion
