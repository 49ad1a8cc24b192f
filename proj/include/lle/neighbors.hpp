#pragma once

#include <Eigen/Core>

#include "lle/point_cloud.hpp"

namespace lle {

// Fixed-k neighbor lists. Row i holds the indices of the k nearest points to
// x_i (self excluded), ordered by distance, ties broken by smaller index.
struct NeighborGraph {
    Eigen::MatrixXi indices;  // N x k
    int k = 0;

    Eigen::Index size() const { return indices.rows(); }
};

// Exact brute-force search, O(N^2 D). Deterministic: distance ties resolve
// to the smaller index.
NeighborGraph knn(const PointCloud& cloud, int k);

}  // namespace lle
