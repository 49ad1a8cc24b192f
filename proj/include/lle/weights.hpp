#pragma once

#include <Eigen/Core>

#include "lle/neighbors.hpp"
#include "lle/point_cloud.hpp"

namespace lle {

// Gram matrix C_i of the neighbor-difference vectors of one point.
struct LocalGram {
    Eigen::MatrixXd matrix;  // k x k, symmetric PSD
    double trace = 0.0;
};

LocalGram local_gram(const PointCloud& cloud, const NeighborGraph& graph,
                     Eigen::Index i);

// C_i counts as numerically singular when its smallest eigenvalue is at or
// below this fraction of trace(C_i).
inline constexpr double kSingularEigRatio = 1e-10;

struct WeightMode {
    enum class Kind { Exact, Regularized };

    Kind kind = Kind::Regularized;
    double eps_ratio = 1e-3;

    static WeightMode exact() { return {Kind::Exact, 0.0}; }
    static WeightMode regularized(double eps_ratio);
};

// Barycentric weights through the stationarity system C w = lambda 1,
// 1^T w = 1. Nonsingular C gives the unique solution C^{-1} 1 normalized;
// singular C gives the minimum-norm exact solution, which equals the
// eps -> 0+ limit of the regularized formula.
Eigen::VectorXd solve_weights_exact(const LocalGram& gram);

// (C + eps I)^{-1} 1 normalized to unit sum, with eps = eps_ratio * trace(C)
// (or eps_ratio itself when the trace vanishes).
Eigen::VectorXd solve_weights_regularized(const LocalGram& gram, double eps_ratio);

struct WeightSet {
    Eigen::MatrixXd weights;   // N x k, rows sum to 1
    Eigen::VectorXd residuals; // ||x_i - sum_j w_j x_{i_j}||
    WeightMode mode;
};

WeightSet compute_weight_set(const PointCloud& cloud, const NeighborGraph& graph,
                             const WeightMode& mode);

}  // namespace lle
