#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "llafusion/dataset.hpp"

namespace llafusion {

struct DenseLayer {
  Eigen::MatrixXd weights;  // out × in
  Eigen::VectorXd bias;     // out
};

/// Fully connected softmax classifier with rectifier hidden units.
///
/// Parameters flatten layer by layer; within a layer the weights come first,
/// grouped by output unit (row-major in `weights`), followed by the biases.
/// The last-layer slice of that vector is the parameter block the Laplace
/// posterior lives on.
class MlpClassifier {
 public:
  MlpClassifier() = default;
  /// All-zero parameters.
  explicit MlpClassifier(std::vector<int> layer_dims);
  /// He-normal weights, zero biases.
  static MlpClassifier initialized(std::vector<int> layer_dims, std::uint64_t seed);

  const std::vector<int>& layer_dims() const { return dims_; }
  int input_dim() const { return dims_.front(); }
  int num_classes() const { return dims_.back(); }
  int penultimate_width() const { return dims_[dims_.size() - 2]; }
  static std::string activation_name() { return "relu"; }

  /// d = (penultimate width + 1) · M
  Eigen::Index last_layer_param_count() const;
  Eigen::Index param_count() const;

  std::vector<DenseLayer>& layers() { return layers_; }
  const std::vector<DenseLayer>& layers() const { return layers_; }
  const DenseLayer& last_layer() const { return layers_.back(); }

  /// Input to the last layer, a(x).
  Eigen::VectorXd penultimate(const Eigen::VectorXd& x) const;
  /// Row n is a(x_n).
  RowMatrix penultimate_batch(const RowMatrix& inputs) const;
  RowMatrix logits_batch(const RowMatrix& inputs) const;

  Eigen::VectorXd last_layer_params() const;
  void set_last_layer_params(const Eigen::VectorXd& theta);
  /// Last-layer logits for a given activation and last-layer parameter vector.
  Eigen::VectorXd head_logits(const Eigen::VectorXd& activation, const Eigen::VectorXd& theta_last) const;

  Eigen::VectorXd flat_params() const;
  void set_flat_params(const Eigen::VectorXd& theta);

  std::uint64_t train_seed = 0;

 private:
  void check_input(Eigen::Index n) const;

  std::vector<int> dims_;
  std::vector<DenseLayer> layers_;
};

Eigen::VectorXd softmax(const Eigen::VectorXd& z);

/// g(x | θ̂)
Eigen::VectorXd logits(const MlpClassifier& model, const Eigen::VectorXd& x);

/// ḡ = g − max_k g_k. Ties subtract the lowest-index maximum.
Eigen::VectorXd shift_logits(const Eigen::VectorXd& g);
Eigen::VectorXd shifted_logits(const MlpClassifier& model, const Eigen::VectorXd& x);

/// softmax(g(x | θ̂))
Eigen::VectorXd predict(const MlpClassifier& model, const Eigen::VectorXd& x);

/// d × M matrix whose column m is ∂g_m/∂θ_last at θ̂.
Eigen::MatrixXd last_layer_jacobian(const MlpClassifier& model, const Eigen::VectorXd& x);
/// Same matrix built from the penultimate activation directly.
Eigen::MatrixXd head_jacobian(const Eigen::VectorXd& activation, int num_classes);

struct TrainConfig {
  int epochs = 3;
  int batch_size = 32;
  double step_size = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double prior_variance = 1.0;  // σ₀², prior N(0, σ₀² I)
  std::uint64_t seed = 0;

  void validate() const;
};

struct TrainResult {
  MlpClassifier model;
  double final_loss = 0.0;  // mean cross-entropy + ‖θ‖² / (2 σ₀² N)
  double train_accuracy = 0.0;
  std::vector<double> epoch_losses;
};

/// MAP training with Adam on mini-batches shuffled by the run seed.
TrainResult train_map(const LabeledSet& data, const std::vector<int>& layer_dims, const TrainConfig& cfg);

/// Mean cross-entropy plus the prior penalty, over the whole set.
double map_objective(const MlpClassifier& model, const LabeledSet& data, double prior_variance);
double accuracy(const MlpClassifier& model, const LabeledSet& data);

/// Binary checkpoint, layout documented in docs/FORMATS.md.
void save_checkpoint(const MlpClassifier& model, const std::filesystem::path& path);
MlpClassifier load_checkpoint(const std::filesystem::path& path);

}  // namespace llafusion
