#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "lle/errors.hpp"

namespace lle {

std::string viridis_color(double u) {
    static constexpr int stops[8][3] = {
        {68, 1, 84},   {70, 50, 126},  {54, 92, 141},  {39, 127, 142},
        {31, 161, 135}, {74, 193, 109}, {160, 218, 57}, {253, 231, 37},
    };
    u = std::clamp(u, 0.0, 1.0);
    const double pos = u * 7.0;
    const int lo = std::min(6, static_cast<int>(pos));
    const double f = pos - lo;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "rgb(%d,%d,%d)",
                  static_cast<int>(std::lround(stops[lo][0] + f * (stops[lo + 1][0] - stops[lo][0]))),
                  static_cast<int>(std::lround(stops[lo][1] + f * (stops[lo + 1][1] - stops[lo][1]))),
                  static_cast<int>(std::lround(stops[lo][2] + f * (stops[lo + 1][2] - stops[lo][2]))));
    return buf;
}

void write_scatter_svg(const std::string& path, const Eigen::MatrixXd& y,
                       const std::optional<Eigen::VectorXd>& color) {
    const Eigen::Index n = y.cols();
    if (n == 0) throw ConfigError("write_scatter_svg: empty embedding");
    if (color && color->size() != n) {
        throw ConfigError("write_scatter_svg: color length mismatch");
    }

    Eigen::VectorXd px = y.row(0);
    Eigen::VectorXd py = y.rows() >= 2 ? Eigen::VectorXd(y.row(1))
                                       : Eigen::VectorXd::Zero(n);

    const double wpx = 640.0, hpx = 640.0, margin = 40.0, radius = 2.5;
    double x0 = px.minCoeff(), x1 = px.maxCoeff();
    double y0 = py.minCoeff(), y1 = py.maxCoeff();
    if (x1 - x0 <= 0.0) x1 = x0 + 1.0;
    if (y1 - y0 <= 0.0) y1 = y0 + 1.0;
    // Same scale in both directions keeps the scatter shape undistorted.
    const double scale = std::min((wpx - 2 * margin) / (x1 - x0),
                                  (hpx - 2 * margin) / (y1 - y0));
    const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);

    double c_lo = 0.0, c_span = 1.0;
    if (color) {
        c_lo = color->minCoeff();
        c_span = color->maxCoeff() - c_lo;
        if (c_span <= 0.0) c_span = 1.0;
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  wpx, hpx, wpx, hpx);
    out << buf;
    out << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                  "stroke=\"#888\" stroke-width=\"1\"/>\n",
                  margin, margin, wpx - 2 * margin, hpx - 2 * margin);
    out << buf;
    // Axis lines through the data origin when it is inside the frame.
    const double ax = wpx / 2 + (0.0 - cx) * scale;
    const double ay = hpx / 2 - (0.0 - cy) * scale;
    if (ax >= margin && ax <= wpx - margin) {
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.2f\" y1=\"%.1f\" x2=\"%.2f\" y2=\"%.1f\" "
                      "stroke=\"#ccc\" stroke-width=\"1\"/>\n",
                      ax, margin, ax, hpx - margin);
        out << buf;
    }
    if (ay >= margin && ay <= hpx - margin) {
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.2f\" x2=\"%.1f\" y2=\"%.2f\" "
                      "stroke=\"#ccc\" stroke-width=\"1\"/>\n",
                      margin, ay, wpx - margin, ay);
        out << buf;
    }

    for (Eigen::Index i = 0; i < n; ++i) {
        const double sx = wpx / 2 + (px(i) - cx) * scale;
        const double sy = hpx / 2 - (py(i) - cy) * scale;
        const std::string fill =
            color ? viridis_color(((*color)(i) - c_lo) / c_span) : std::string("#31688e");
        std::snprintf(buf, sizeof(buf),
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.1f\" fill=\"%s\" "
                      "fill-opacity=\"0.8\"/>\n",
                      sx, sy, radius, fill.c_str());
        out << buf;
    }
    out << "</svg>\n";
    if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace lle
