#include "kellipse/plot.hpp"

#include <cmath>
#include <cstdio>

#include "kellipse/error.hpp"

namespace kellipse {

namespace {

std::string num6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::vector<Segment> marching_squares(const std::function<double(double, double)>& f,
                                      const PlotWindow& w, int res) {
    if (res < 2) throw InvalidArgument("marching_squares: resolution must be >= 2");
    if (!(w.x1 > w.x0) || !(w.y1 > w.y0)) throw InvalidArgument("marching_squares: empty window");

    int nx = res + 1, ny = res + 1;
    double hx = (w.x1 - w.x0) / res, hy = (w.y1 - w.y0) / res;
    std::vector<double> v(static_cast<size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            v[static_cast<size_t>(i) * ny + j] = f(w.x0 + i * hx, w.y0 + j * hy);

    auto lerp = [](double ax, double ay, double av, double bx, double by, double bv) {
        double t = av / (av - bv);
        return std::pair<double, double>{ax + t * (bx - ax), ay + t * (by - ay)};
    };

    std::vector<Segment> segs;
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            double x0 = w.x0 + i * hx, x1 = x0 + hx;
            double y0 = w.y0 + j * hy, y1 = y0 + hy;
            double v00 = v[static_cast<size_t>(i) * ny + j];
            double v10 = v[static_cast<size_t>(i + 1) * ny + j];
            double v11 = v[static_cast<size_t>(i + 1) * ny + j + 1];
            double v01 = v[static_cast<size_t>(i) * ny + j + 1];
            int c = (v00 > 0 ? 1 : 0) | (v10 > 0 ? 2 : 0) | (v11 > 0 ? 4 : 0) | (v01 > 0 ? 8 : 0);
            if (c == 0 || c == 15) continue;

            // Edge interpolation points: bottom, right, top, left.
            auto pb = lerp(x0, y0, v00, x1, y0, v10);
            auto pr = lerp(x1, y0, v10, x1, y1, v11);
            auto pt = lerp(x1, y1, v11, x0, y1, v01);
            auto pl = lerp(x0, y0, v00, x0, y1, v01);
            auto emit = [&](std::pair<double, double> a, std::pair<double, double> b) {
                segs.push_back({a.first, a.second, b.first, b.second});
            };
            switch (c) {
                case 1: case 14: emit(pl, pb); break;
                case 2: case 13: emit(pb, pr); break;
                case 3: case 12: emit(pl, pr); break;
                case 4: case 11: emit(pr, pt); break;
                case 6: case 9:  emit(pb, pt); break;
                case 7: case 8:  emit(pl, pt); break;
                case 5: case 10: {
                    double center = 0.25 * (v00 + v10 + v11 + v01);
                    bool center_pos = center > 0;
                    if ((c == 5) == center_pos) {
                        emit(pl, pt);
                        emit(pb, pr);
                    } else {
                        emit(pl, pb);
                        emit(pr, pt);
                    }
                    break;
                }
                default: break;
            }
        }
    }
    return segs;
}

SvgCanvas::SvgCanvas(PlotWindow window, int width_px, int height_px)
    : window_(window), width_(width_px), height_(height_px) {}

std::pair<double, double> SvgCanvas::to_px(double x, double y) const {
    double sx = (x - window_.x0) / (window_.x1 - window_.x0) * width_;
    double sy = (window_.y1 - y) / (window_.y1 - window_.y0) * height_;
    return {sx, sy};
}

void SvgCanvas::add_segments(const std::vector<Segment>& segs, const std::string& color,
                             double stroke_width, const std::string& dash) {
    if (segs.empty()) return;
    std::string d;
    for (const auto& s : segs) {
        auto a = to_px(s[0], s[1]);
        auto b = to_px(s[2], s[3]);
        d += "M" + num6(a.first) + " " + num6(a.second) + "L" + num6(b.first) + " " + num6(b.second);
    }
    std::string attrs = "fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" + num6(stroke_width) + "\"";
    if (!dash.empty()) attrs += " stroke-dasharray=\"" + dash + "\"";
    body_.push_back("<path " + attrs + " d=\"" + d + "\"/>");
}

void SvgCanvas::add_polyline(const std::vector<std::pair<double, double>>& pts,
                             const std::string& color, double stroke_width, bool close) {
    if (pts.size() < 2) return;
    std::string d;
    for (size_t i = 0; i < pts.size(); ++i) {
        auto p = to_px(pts[i].first, pts[i].second);
        d += (i == 0 ? "M" : "L") + num6(p.first) + " " + num6(p.second);
    }
    if (close) d += "Z";
    body_.push_back("<path fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                    num6(stroke_width) + "\" d=\"" + d + "\"/>");
}

void SvgCanvas::add_marker(double x, double y, double radius_px, const std::string& color) {
    auto p = to_px(x, y);
    body_.push_back("<circle cx=\"" + num6(p.first) + "\" cy=\"" + num6(p.second) + "\" r=\"" +
                    num6(radius_px) + "\" fill=\"" + color + "\"/>");
}

std::string SvgCanvas::render() const {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
           "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) +
           " " + std::to_string(height_) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& e : body_) out += e + "\n";
    out += "</svg>\n";
    return out;
}

}  // namespace kellipse
