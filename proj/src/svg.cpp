#include "choquet/svg.hpp"

#include <algorithm>
#include <array>

#include "choquet/textutil.hpp"

namespace choquet {

namespace {

constexpr int kPrecision = 2;
constexpr double kMargin = 32.0;
constexpr std::array<const char*, 4> kPalette = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd"};

std::string num(double v) { return format_fixed(v, kPrecision); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

Eigen::MatrixX2d project(const FunctionSystem& sys, const PlotOptions& options) {
  const auto n = static_cast<Eigen::Index>(sys.size());
  std::vector<std::size_t> axes = options.axes;
  if (axes.size() > 2) {
    throw InputError("plot takes at most 2 projection axes (got " + std::to_string(axes.size()) + ")");
  }
  for (std::size_t a : axes) {
    if (a >= sys.dim()) throw InputError("projection axis " + std::to_string(a) + " out of range");
  }
  if (axes.empty()) {
    if (sys.space().coords) return *sys.space().coords;
    const Eigen::MatrixXd& b = sys.basis();
    for (Eigen::Index i = 0; i < b.rows() && axes.size() < 2; ++i) {
      if (b.row(i).maxCoeff() - b.row(i).minCoeff() > 1e-12) axes.push_back(static_cast<std::size_t>(i));
    }
  }
  Eigen::MatrixX2d xy = Eigen::MatrixX2d::Zero(n, 2);
  for (std::size_t k = 0; k < axes.size(); ++k) {
    xy.col(static_cast<Eigen::Index>(k)) = sys.basis().row(static_cast<Eigen::Index>(axes[k])).transpose();
  }
  return xy;
}

}  // namespace

std::string plot_svg(const FunctionSystem& sys, const std::vector<Overlay>& overlays,
                     const PlotOptions& options) {
  for (const Overlay& o : overlays) {
    for (std::size_t j : o.points.indices) sys.check_index(j);
  }
  const Eigen::MatrixX2d xy = project(sys, options);
  const double w = options.width;
  const double h = options.height;
  const Eigen::Vector2d lo = xy.colwise().minCoeff();
  const Eigen::Vector2d hi = xy.colwise().maxCoeff();
  const double span = std::max({hi(0) - lo(0), hi(1) - lo(1), 1e-12});
  const double scale = std::min(w, h) - 2 * kMargin;
  const Eigen::Vector2d center = (lo + hi) / 2;
  auto px = [&](Eigen::Index j) { return w / 2 + (xy(j, 0) - center(0)) / span * scale; };
  auto py = [&](Eigen::Index j) { return h / 2 - (xy(j, 1) - center(1)) / span * scale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g id=\"points\" fill=\"#444\">\n";
  for (Eigen::Index j = 0; j < xy.rows(); ++j) {
    out += "<circle cx=\"" + num(px(j)) + "\" cy=\"" + num(py(j)) + "\" r=\"2.5\"/>\n";
  }
  out += "</g>\n";
  for (std::size_t k = 0; k < overlays.size(); ++k) {
    const char* color = kPalette[k % kPalette.size()];
    const double radius = 5.0 + 2.5 * static_cast<double>(k);
    out += "<g id=\"" + escape(overlays[k].name) + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\">\n";
    for (std::size_t j : overlays[k].points.indices) {
      const auto jj = static_cast<Eigen::Index>(j);
      out += "<circle cx=\"" + num(px(jj)) + "\" cy=\"" + num(py(jj)) + "\" r=\"" + num(radius) + "\"/>\n";
    }
    out += "</g>\n";
    out += "<text x=\"8\" y=\"" + num(16.0 + 14.0 * static_cast<double>(k)) + "\" font-size=\"12\" fill=\"" +
           color + "\">" + escape(overlays[k].name) + "</text>\n";
  }
  if (sys.size() <= options.max_labels) {
    out += "<g id=\"labels\" font-size=\"10\" fill=\"#222\">\n";
    for (Eigen::Index j = 0; j < xy.rows(); ++j) {
      out += "<text x=\"" + num(px(j) + 6) + "\" y=\"" + num(py(j) - 6) + "\">" +
             escape(sys.label(static_cast<std::size_t>(j))) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace choquet
