#include "hetcorr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hetcorr/io.hpp"

namespace hetcorr {

namespace {
constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}
}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgPlot::add_series(const std::vector<double>& x,
                         const std::vector<double>& y,
                         const std::string& color, const std::string& label) {
  series_.push_back({x, y, color, label});
}

void SvgPlot::add_hline(double y, const std::string& color,
                        const std::string& label) {
  hlines_.push_back({y, color, label});
}

std::string SvgPlot::render() const {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const auto& s : series_) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  for (const auto& h : hlines_) {
    ymin = std::min(ymin, h.y);
    ymax = std::max(ymax, h.y);
  }
  if (!std::isfinite(xmin)) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (!std::isfinite(ymin)) {
    ymin = 0.0;
    ymax = 1.0;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    ymax += 0.5;
    ymin -= 0.5;
  }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double pw = kWidth - kMarginLeft - kMarginRight;
  const double ph = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double x) {
    return kMarginLeft + (x - xmin) / (xmax - xmin) * pw;
  };
  const auto py = [&](double y) {
    return kMarginTop + (ymax - y) / (ymax - ymin) * ph;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << title_
      << "</text>\n";

  // frame and tick labels
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    svg << "<text x=\"" << px(fx) << "\" y=\"" << kHeight - kMarginBottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << fmt(fx) << "</text>\n";
    svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << py(fy) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << fmt(fy) << "</text>\n";
  }
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\">" << x_label_ << "</text>\n";
  svg << "<text x=\"16\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\" transform=\"rotate(-90 16 " << kHeight / 2 << ")\">"
      << y_label_ << "</text>\n";

  for (const auto& h : hlines_) {
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << py(h.y) << "\" x2=\""
        << kWidth - kMarginRight << "\" y2=\"" << py(h.y) << "\" stroke=\""
        << h.color << "\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\"/>\n";
  }

  double legend_y = kMarginTop + 16.0;
  for (const auto& s : series_) {
    svg << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      svg << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    svg << "\"/>\n";
    if (!s.label.empty()) {
      svg << "<text x=\"" << kWidth - kMarginRight - 8 << "\" y=\"" << legend_y
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          << "font-size=\"12\" fill=\"" << s.color << "\">" << s.label
          << "</text>\n";
      legend_y += 16.0;
    }
  }
  for (const auto& h : hlines_) {
    if (!h.label.empty()) {
      svg << "<text x=\"" << kWidth - kMarginRight - 8 << "\" y=\"" << legend_y
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          << "font-size=\"12\" fill=\"" << h.color << "\">" << h.label
          << "</text>\n";
      legend_y += 16.0;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void SvgPlot::write(const std::filesystem::path& path) const {
  write_text_file(path, render());
}

}  // namespace hetcorr
