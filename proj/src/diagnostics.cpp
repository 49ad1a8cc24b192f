#include "lle/diagnostics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "lle/errors.hpp"

namespace lle {

double affine_fit_residual(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    const Eigen::Index dim = x.rows();
    const Eigen::Index n = x.cols();
    if (y.cols() != n) throw ConfigError("affine_fit_residual: column count mismatch");
    if (n <= dim + 1) throw ConfigError("affine_fit_residual: need N > D + 1");

    Eigen::MatrixXd xc = x.colwise() - x.rowwise().mean();
    Eigen::MatrixXd yc = y.colwise() - y.rowwise().mean();
    if (xc.norm() <= 0.0) throw ConfigError("affine_fit_residual: degenerate X");
    const double y_norm = yc.norm();
    if (y_norm <= 0.0) return 0.0;  // constant Y is an exact affine image

    // Centered least squares handles rank-deficient X via SVD truncation.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(xc.transpose(),
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::MatrixXd bt = svd.solve(yc.transpose());
    const double resid = (xc.transpose() * bt - yc.transpose()).norm();
    return std::min(1.0, resid / y_norm);
}

double procrustes_distance(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z) {
    if (y.rows() != z.rows() || y.cols() != z.cols()) {
        throw ConfigError("procrustes_distance: shape mismatch");
    }
    if (y.cols() < y.rows()) throw ConfigError("procrustes_distance: need N >= d");

    Eigen::MatrixXd yc = y.colwise() - y.rowwise().mean();
    Eigen::MatrixXd zc = z.colwise() - z.rowwise().mean();
    const double ny = yc.norm();
    const double nz = zc.norm();
    if (ny <= 0.0 || nz <= 0.0) {
        throw NumericalError("procrustes_distance: zero-variance input");
    }
    yc /= ny;
    zc /= nz;

    // min over orthogonal Q of ||Q Y' - Z'||^2 = 2 - 2 * sum of singular
    // values of Y' Z'^T.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(yc * zc.transpose());
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * svd.singularValues().sum()));
}

double param_recovery_score(const Eigen::MatrixXd& y, const PointCloud& cloud) {
    if (!cloud.params) throw ConfigError("param_recovery_score: cloud has no params");
    Eigen::MatrixXd chart = cloud.params->transpose();
    if (y.rows() != chart.rows()) {
        throw ConfigError("param_recovery_score: embedding dimension " +
                          std::to_string(y.rows()) + " does not match chart dimension " +
                          std::to_string(chart.rows()));
    }
    return procrustes_distance(y, chart);
}

double param_recovery_score(const EmbeddingResult& result, const PointCloud& cloud) {
    return param_recovery_score(result.y, cloud);
}

}  // namespace lle
