#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>

namespace lle {

// 2-D scatter plot written as plain SVG markup (circles plus a frame), no
// plotting dependency and no timestamps, so output is byte-reproducible.
// Points are the first two rows of y; color, when given, is mapped through
// an 8-stop viridis-like ramp (normalized over its own range).
void write_scatter_svg(const std::string& path, const Eigen::MatrixXd& y,
                       const std::optional<Eigen::VectorXd>& color);

// Linear interpolation over the 8-stop ramp, u clamped to [0, 1]; returns
// an SVG fill string "rgb(r,g,b)".
std::string viridis_color(double u);

}  // namespace lle
