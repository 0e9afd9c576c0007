#pragma once

#include <string>
#include <vector>

namespace llafusion::svg {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Static line chart with axes, ticks and a legend. Output depends only on
/// the arguments, so identical data produces identical bytes.
std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series);

/// Grouped bar chart over shared bin edges (edges.size() == values.size() + 1
/// for every series).
std::string histogram(const std::string& title, const std::string& x_label, const std::vector<double>& edges,
                      const std::vector<Series>& series);

}  // namespace llafusion::svg
