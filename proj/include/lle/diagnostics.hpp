#pragma once

#include <Eigen/Core>

#include "lle/point_cloud.hpp"
#include "lle/spectral.hpp"

namespace lle {

// Relative residual of the best affine fit B X + b 1^T ~ Y, in [0, 1].
// 0 means Y is an exact affine image of X, i.e. a (possibly degenerate)
// projection of the input. Requires N > D + 1.
double affine_fit_residual(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

// Both configurations are centered and scaled to unit Frobenius norm, then
// aligned over the full orthogonal group (reflections allowed). Result is in
// [0, sqrt(2)].
double procrustes_distance(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z);

// Procrustes distance between Y and the ground-truth chart params^T. Low
// means the embedding recovered the intrinsic coordinates up to isometry.
double param_recovery_score(const Eigen::MatrixXd& y, const PointCloud& cloud);
double param_recovery_score(const EmbeddingResult& result, const PointCloud& cloud);

struct DiagnosticsReport {
    double affine_fit_residual = 0.0;
    double procrustes_to_pattern = 0.0;
    double param_recovery = 0.0;
    int null_multiplicity = 0;
    bool constant_vector_found = false;
};

}  // namespace lle
