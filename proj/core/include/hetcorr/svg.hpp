#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hetcorr {

/// Minimal static line-plot writer. Self-contained SVG, no external assets.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void add_series(const std::vector<double>& x, const std::vector<double>& y,
                  const std::string& color, const std::string& label = "");
  void add_hline(double y, const std::string& color,
                 const std::string& label = "");

  std::string render() const;
  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string color;
    std::string label;
  };
  struct HLine {
    double y;
    std::string color;
    std::string label;
  };

  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
  std::vector<HLine> hlines_;
};

}  // namespace hetcorr
