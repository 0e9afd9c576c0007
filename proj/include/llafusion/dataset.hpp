#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace llafusion {

/// Feature matrix with one item per row.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct LabeledSet {
  RowMatrix inputs;         // N × n_x
  std::vector<int> labels;  // N entries in [0, num_classes)
  int num_classes = 0;

  Eigen::Index size() const { return inputs.rows(); }
  Eigen::Index dim() const { return inputs.cols(); }

  /// Throws DataError when labels are out of range, counts disagree, or a
  /// feature is not finite.
  void validate() const;
};

/// Reads an IDX image/label pair. Images may be unsigned-byte tensors
/// (magic 0x00000803, scaled by 1/255) or 2-D double matrices (magic
/// 0x00000E02, used for synthetic exports). Gzipped files are read
/// transparently.
LabeledSet load_idx(const std::filesystem::path& images, const std::filesystem::path& labels,
                    int num_classes = 10);

enum class IdxEncoding { UnsignedByte, Float64 };

/// Writes a set as an IDX pair. UnsignedByte requires features in [0, 1] and
/// stores round(255·v) as a 1×n_x image per item; Float64 is lossless.
void write_idx(const LabeledSet& set, const std::filesystem::path& images,
               const std::filesystem::path& labels, IdxEncoding encoding = IdxEncoding::UnsignedByte);

struct BlobSpec {
  int num_classes = 3;
  int per_class = 100;
  int dim = 2;
  double separation = 4.0;
  std::uint64_t seed = 0;
  double center_shift = 0.0;  // added to every coordinate of every class mean
};

/// Isotropic unit-variance Gaussian clusters whose means form a regular
/// simplex with pairwise distance `separation`. Requires dim ≥ num_classes - 1.
/// Rows are ordered class-major.
LabeledSet make_blobs(const BlobSpec& spec);

/// Class means used by make_blobs (num_classes × dim).
RowMatrix blob_means(int num_classes, int dim, double separation);

struct Corruption {
  enum class Kind { None, Noise, Erase };
  Kind kind = Kind::None;
  double magnitude = 0.0;  // σ for Noise, erased fraction for Erase

  static Corruption none() { return {}; }
  static Corruption noise(double sigma) { return {Kind::Noise, sigma}; }
  static Corruption erase(double fraction) { return {Kind::Erase, fraction}; }
  std::string describe() const;
};

struct FrameTag {
  std::size_t source_row = 0;
  Corruption corruption;  // Kind::None for an original frame
  bool corrupted() const { return corruption.kind != Corruption::Kind::None; }
};

struct InputSequence {
  RowMatrix inputs;  // L × n_x
  int true_class = 0;
  std::vector<FrameTag> provenance;

  Eigen::Index length() const { return inputs.rows(); }
};

/// Draws `length` distinct rows of class `class_id` and applies `corruption`
/// to the frames listed in `corrupt_frames` (all frames when empty).
/// Throws DataError reporting the available count when the class is too small.
InputSequence build_sequence(const LabeledSet& source, int class_id, std::size_t length,
                             const Corruption& corruption, std::uint64_t seed,
                             std::span<const std::size_t> corrupt_frames = {});

/// Applies a corruption in place. Noise adds σ·N(0,1) to every feature.
/// Erase zeroes a square patch covering `fraction` of the area when the
/// feature count is a perfect square, else a contiguous run of features.
void apply_corruption(Eigen::Ref<Eigen::RowVectorXd> x, const Corruption& corruption, std::uint64_t seed);

LabeledSet subset(const LabeledSet& set, std::span<const std::size_t> rows);
LabeledSet concat(const LabeledSet& a, const LabeledSet& b);

/// Seeded shuffle followed by consecutive slices of the requested sizes.
std::vector<LabeledSet> split(const LabeledSet& set, std::span<const std::size_t> sizes, std::uint64_t seed);

}  // namespace llafusion
