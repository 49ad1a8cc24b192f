#include "lle/neighbors.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "lle/errors.hpp"

namespace lle {

NeighborGraph knn(const PointCloud& cloud, int k) {
    const Eigen::Index n = cloud.size();
    if (k < 1 || k >= n) {
        throw ConfigError("knn: k must satisfy 1 <= k <= N-1 (k=" + std::to_string(k) +
                          ", N=" + std::to_string(n) + ")");
    }

    NeighborGraph graph;
    graph.k = k;
    graph.indices.resize(n, k);

    std::vector<double> d2(static_cast<size_t>(n));
    std::vector<int> order(static_cast<size_t>(n - 1));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j)
            d2[static_cast<size_t>(j)] = (cloud.points.col(j) - cloud.points.col(i)).squaredNorm();

        int pos = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) order[static_cast<size_t>(pos++)] = j;

        std::partial_sort(order.begin(), order.begin() + k, order.end(),
                          [&d2](int a, int b) {
                              double da = d2[static_cast<size_t>(a)];
                              double db = d2[static_cast<size_t>(b)];
                              return da < db || (da == db && a < b);
                          });
        for (int j = 0; j < k; ++j) graph.indices(i, j) = order[static_cast<size_t>(j)];
    }
    return graph;
}

}  // namespace lle
