#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "llafusion/dataset.hpp"

namespace llafusion {

/// Estimated class PMF, optionally with the per-sample softmax vectors it
/// was averaged from.
struct PmfEstimate {
  Eigen::VectorXd pmf;
  std::optional<RowMatrix> sample_cloud;  // K × M
  std::string method;                     // product | log_linear | info_fusion | ella | param_space | ...
  std::uint64_t seed = 0;
  std::int64_t samples = 0;               // K (0 for point estimates)
};

}  // namespace llafusion
