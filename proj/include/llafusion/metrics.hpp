#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "llafusion/dataset.hpp"

namespace llafusion {

struct BinRow {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
  double accuracy = 0.0;    // 0 for empty bins
  double confidence = 0.0;  // 0 for empty bins
};

struct CalibrationResult {
  double ece = 0.0;                // Σ_j |B_j|/N · |acc − conf|
  double ece_inverse_bin = 0.0;  // Σ_j 1/|B_j| · |acc − conf|
  double accuracy = 0.0;
  std::vector<BinRow> bins;
};

/// Index of the maximum, lowest index on ties.
Eigen::Index argmax(const Eigen::Ref<const Eigen::RowVectorXd>& p);

/// Bin index j (0-based) with j/J ≤ confidence < (j+1)/J, top bin closed.
std::size_t confidence_bin(double confidence, int bins);

/// Binned calibration by max-probability. `preds` is N × M.
CalibrationResult calibration(const RowMatrix& preds, std::span<const int> labels, int bins = 10);

struct ScoreResult {
  double mean_nll = 0.0;
  double total_log_likelihood = 0.0;
  double brier = 0.0;
  bool clamped = false;  // some true-class probability was 0 and clamped to 1e-300
};

ScoreResult scores(const RowMatrix& preds, std::span<const int> labels);

/// −Σ p ln p with 0 ln 0 = 0.
double entropy(const Eigen::Ref<const Eigen::RowVectorXd>& pmf);
std::vector<double> entropies(const RowMatrix& preds);

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
};

struct DetectionReport {
  double auroc = 0.0;
  double aupr = 0.0;
  double entropy_gap_total = 0.0;  // Σ in − Σ out
  double entropy_gap_mean = 0.0;   // mean in − mean out
  std::vector<CurvePoint> roc;     // (P_FA, P_D)
  std::vector<CurvePoint> pr;      // (recall, precision)
};

/// In-distribution is the positive hypothesis and is detected when the score
/// is at or below the threshold (low entropy ⇒ in-distribution). Thresholds
/// sweep every distinct score; tied scores move as one step.
DetectionReport detection(std::span<const double> in_scores, std::span<const double> out_scores);

std::vector<double> log_grid(double lo, double hi, int count);

/// Grid minimizer of validation mean NLL of softmax(g / T); ties keep the
/// smallest T. Default grid: 100 log-spaced points on [0.05, 20].
double fit_temperature(const RowMatrix& logits, std::span<const int> labels, std::span<const double> grid = {});

RowMatrix temperature_softmax(const RowMatrix& logits, double temperature);

struct EvalReport {
  std::string method;
  std::string dataset;
  std::size_t count = 0;
  double accuracy = 0.0;
  double mean_nll = 0.0;
  double total_log_likelihood = 0.0;
  double brier = 0.0;
  double ece = 0.0;
  double ece_percent = 0.0;
  double ece_inverse_bin = 0.0;
  double mean_entropy = 0.0;
  bool nll_clamped = false;
  std::vector<BinRow> bins;
};

EvalReport evaluate(const RowMatrix& preds, std::span<const int> labels, int bins, std::string method,
                    std::string dataset);

/// `key = value` lines, doubles with 17 significant digits.
void write_kv(std::ostream& os, const EvalReport& report);
EvalReport read_eval_kv(std::istream& is);
void write_kv(std::ostream& os, const DetectionReport& report, const std::string& method);
DetectionReport read_detection_kv(std::istream& is);

/// One CSV row per bin: method,dataset,bin,lower,upper,count,accuracy,confidence.
void write_bins_csv(std::ostream& os, const EvalReport& report, bool header = true);
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& points, const std::string& x_name,
                     const std::string& y_name);

std::string format_double(double v);

}  // namespace llafusion
