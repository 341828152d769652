#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace kellipse {

struct PlotWindow {
    double x0, y0, x1, y1;
};

using Segment = std::array<double, 4>;  // x1, y1, x2, y2 in world coordinates

/// Zero-contour segments of f on a res x res cell grid by marching squares
/// with linear edge interpolation; saddle cells are split on the center sign.
std::vector<Segment> marching_squares(const std::function<double(double, double)>& f,
                                      const PlotWindow& w, int res);

/// Minimal deterministic SVG writer; numeric fields are rounded to 6 digits.
class SvgCanvas {
  public:
    SvgCanvas(PlotWindow window, int width_px, int height_px);

    void add_segments(const std::vector<Segment>& segs, const std::string& color,
                      double stroke_width, const std::string& dash = "");
    void add_polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color,
                      double stroke_width, bool close = false);
    void add_marker(double x, double y, double radius_px, const std::string& color);
    std::string render() const;

  private:
    std::pair<double, double> to_px(double x, double y) const;

    PlotWindow window_;
    int width_, height_;
    std::vector<std::string> body_;
};

}  // namespace kellipse
