#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "llafusion/aggregate.hpp"
#include "llafusion/dataset.hpp"
#include "llafusion/laplace.hpp"
#include "llafusion/metrics.hpp"
#include "llafusion/network.hpp"

namespace llafusion {

inline constexpr int kConfigVersion = 1;

struct DatasetConfig {
  std::string kind = "blobs";  // "blobs" | "idx"

  // kind == "idx": one labeled pool split into train/validation/test, and an
  // optional second pool whose first `ood_count` shuffled items are the
  // out-of-distribution set.
  std::string images;
  std::string labels;
  std::string ood_images;
  std::string ood_labels;
  int num_classes = 10;

  // kind == "blobs": each split is drawn independently from the same clusters;
  // the out-of-distribution set shifts every class mean by `ood_shift`.
  BlobSpec blobs;
  double ood_shift = 25.0;

  std::size_t train_size = 0;
  std::size_t validation_size = 0;
  std::size_t test_size = 0;
  std::size_t ood_count = 0;
};

struct SequenceConfig {
  int count = 100;
  int length = 6;
  int corrupt_frame = 3;  // 0-based frame index; negative corrupts every frame
  std::string corruption = "noise";  // "none" | "noise" | "erase"
  double magnitude = 4.0;
  std::string method = "lla_fusion";  // "lla_fusion" | "ella"
};

struct RunConfig {
  int version = kConfigVersion;
  DatasetConfig dataset;
  std::vector<int> architecture;
  TrainConfig train;
  int ensemble_size = 5;
  std::vector<std::string> methods{"softmax", "temp_scaling", "deep_ensemble", "single_lla", "lla_fusion", "ella"};
  std::int64_t samples = 1000;
  std::uint64_t master_seed = 0;
  int bins = 10;
  double temperature_lo = 0.05;
  double temperature_hi = 20.0;
  int temperature_count = 100;
  bool fit_t_theta = true;
  std::int64_t t_theta_samples = 200;
  std::size_t t_theta_items = 1000;  // leading validation items used for the T_θ fit
  double t_theta = 1.0;              // used when fit_t_theta is false
  std::string t_theta_search = "first_local";  // "first_local" | "global"
  CrossPolicy cross_policy;
  std::string ella_weights = "uniform";  // "uniform" | "inverse_trace"
  SequenceConfig sequence;
  std::string out_dir = "out";
  int threads = 0;  // 0 = hardware concurrency

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& json_text);
std::string dump_config(const RunConfig& cfg);

/// Methods understood by evaluate/ood.
const std::vector<std::string>& known_methods();

struct DataSplits {
  LabeledSet train;
  LabeledSet validation;
  LabeledSet test;
  LabeledSet ood;
};

/// Deterministic in the master seed.
DataSplits prepare_data(const RunConfig& cfg);

/// Stage seeds, all derived from the master seed.
std::uint64_t member_seed(const RunConfig& cfg, int member);
std::uint64_t stage_seed(const RunConfig& cfg, const std::string& stage, std::uint64_t index = 0);

struct Member {
  MlpClassifier model;
  LaplacePosterior posterior;
};

struct TrainSummary {
  std::vector<TrainResult> results;
  std::vector<double> t_theta;
  std::filesystem::path manifest;
};

/// Trains C members, builds their posteriors, and writes member_<c>.ckpt,
/// member_<c>.post and manifest.json under out_dir.
TrainSummary cmd_train(const RunConfig& cfg, std::ostream& log);

/// Reads the members written by cmd_train. Throws DataError for missing files.
std::vector<Member> load_members(const RunConfig& cfg);

/// Per-item PMFs for every requested method, rows in set order.
struct MethodPredictions {
  std::string method;
  RowMatrix pmfs;
  std::vector<std::uint64_t> seeds;
  std::vector<LogitGaussian> gaussians;  // fused logit Gaussian per item, when the method has one
};

struct PredictionContext {
  std::vector<Member> members;
  double temperature = 1.0;
};

PredictionContext make_context(const RunConfig& cfg, std::vector<Member> members, const LabeledSet& validation);

MethodPredictions predict_method(const RunConfig& cfg, const PredictionContext& ctx, const std::string& method,
                                 const RowMatrix& inputs, const std::string& stream);

std::vector<EvalReport> cmd_evaluate(const RunConfig& cfg, std::ostream& log);
std::vector<DetectionReport> cmd_ood(const RunConfig& cfg, std::ostream& log);

struct SequenceStats {
  int sequences = 0;
  int recovered = 0;          // fused argmax at l = L equals the true class
  int corrupted_wrong = 0;    // corrupted frame alone misclassifies
};

SequenceStats cmd_sequence(const RunConfig& cfg, std::ostream& log);

struct FuseOptions {
  std::vector<std::filesystem::path> inputs;
  std::string rule = "info";  // "info" | "product" | "log_linear"
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
  std::filesystem::path output;
  int bins = 10;
};

/// Fuses prediction dumps item by item and writes one record per item.
/// Returns the report computed from the fused PMFs.
EvalReport cmd_fuse(const FuseOptions& opts, std::ostream& log);

/// One prediction-dump line.
struct DumpRecord {
  std::string method;
  std::size_t item = 0;
  int classifiers = 1;
  int inputs = 1;
  int classes = 0;
  int label = -1;
  std::vector<double> pmf;
  std::vector<double> mean;       // empty when the method has no logit Gaussian
  std::vector<double> cov_lower;  // row-major lower triangle of the M × M covariance
  std::uint64_t seed = 0;
  std::int64_t samples = 0;
};

std::string to_json_line(const DumpRecord& rec);
DumpRecord parse_json_line(const std::string& line);
std::vector<DumpRecord> read_dump(const std::filesystem::path& path);

}  // namespace llafusion
