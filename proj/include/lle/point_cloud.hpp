#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>

namespace lle {

// One sample per column: points is D x N. params, when present, holds the
// ground-truth intrinsic coordinates (arc length s, height h) as one row per
// sample; it is only produced by the synthetic generator.
struct PointCloud {
    Eigen::MatrixXd points;
    std::optional<Eigen::MatrixXd> params;
    std::uint64_t seed = 0;

    Eigen::Index dim() const { return points.rows(); }
    Eigen::Index size() const { return points.cols(); }
};

// Largest pairwise Euclidean distance. O(N^2 D); fine at desk scale.
double diameter(const PointCloud& cloud);

// CSV with header x1..xD (plus s,h when params are present), one sample per
// row, 17 significant digits so doubles round-trip exactly.
void save_csv(const PointCloud& cloud, const std::string& path);
PointCloud load_csv(const std::string& path);

}  // namespace lle
