#pragma once

// Independent reference computations for the test suites. Everything here is
// deliberately written from scratch (plain loops, classic algorithms) so the
// checks do not share a code path with the library under test.

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "lle/point_cloud.hpp"
#include "lle/rng.hpp"

namespace testsupport {

// Cyclic Jacobi eigensolver for small symmetric matrices. Returns eigenvalues
// ascending with matching eigenvector columns.
inline void jacobi_eig_sym(Eigen::MatrixXd a, Eigen::VectorXd& values,
                           Eigen::MatrixXd& vectors) {
    const Eigen::Index n = a.rows();
    vectors = Eigen::MatrixXd::Identity(n, n);
    const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(off) < 1e-15 * scale) break;

        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
                const double c = std::cos(theta), s = std::sin(theta);
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - s * arq;
                    a(r, q) = s * arp + c * arq;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double apr = a(p, r), aqr = a(q, r);
                    a(p, r) = c * apr - s * aqr;
                    a(q, r) = s * apr + c * aqr;
                }
                for (Eigen::Index r = 0; r < n; ++r) {
                    const double vrp = vectors(r, p), vrq = vectors(r, q);
                    vectors(r, p) = c * vrp - s * vrq;
                    vectors(r, q) = s * vrp + c * vrq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
    values.resize(n);
    Eigen::MatrixXd sorted(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        values(j) = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]);
        sorted.col(j) = vectors.col(order[static_cast<size_t>(j)]);
    }
    vectors = sorted;
}

// Full-sort k-nearest-neighbor reference: all pairwise distances, stable
// (distance, index) ordering, self excluded.
inline std::vector<std::vector<int>> brute_knn(const Eigen::MatrixXd& points, int k) {
    const Eigen::Index n = points.cols();
    std::vector<std::vector<int>> result(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        std::vector<std::pair<double, int>> dist;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) continue;
            dist.emplace_back((points.col(j) - points.col(i)).norm(), static_cast<int>(j));
        }
        std::sort(dist.begin(), dist.end());
        for (int j = 0; j < k; ++j) result[static_cast<size_t>(i)].push_back(dist[static_cast<size_t>(j)].second);
    }
    return result;
}

// Dense alignment matrix (I - W)^T (I - W) assembled with plain loops.
inline Eigen::MatrixXd dense_alignment(const Eigen::MatrixXi& indices,
                                       const Eigen::MatrixXd& weights) {
    const Eigen::Index n = indices.rows();
    Eigen::MatrixXd imw = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < indices.cols(); ++j)
            imw(i, indices(i, j)) -= weights(i, j);
    return imw.transpose() * imw;
}

// Brute-force orthogonal Procrustes for d == 2: scan rotation angles over
// both reflection classes, then golden-section refine around the best cell.
inline double procrustes_2d_grid(const Eigen::MatrixXd& y, const Eigen::MatrixXd& z) {
    Eigen::MatrixXd yc = y.colwise() - y.rowwise().mean();
    Eigen::MatrixXd zc = z.colwise() - z.rowwise().mean();
    yc /= yc.norm();
    zc /= zc.norm();

    auto cost = [&](double theta, bool reflect) {
        Eigen::Matrix2d q;
        q << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
        if (reflect) q.row(1) = -q.row(1);
        return (q * yc - zc).norm();
    };

    double best = std::numeric_limits<double>::infinity();
    for (int refl = 0; refl < 2; ++refl) {
        const int grid = 20000;
        double best_theta = 0.0;
        double best_here = std::numeric_limits<double>::infinity();
        for (int g = 0; g < grid; ++g) {
            const double theta = 2.0 * std::numbers::pi * g / grid;
            const double c = cost(theta, refl != 0);
            if (c < best_here) {
                best_here = c;
                best_theta = theta;
            }
        }
        double lo = best_theta - 2.0 * std::numbers::pi / grid;
        double hi = best_theta + 2.0 * std::numbers::pi / grid;
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
        double fa = cost(a, refl != 0), fb = cost(b, refl != 0);
        while (hi - lo > 1e-12) {
            if (fa < fb) {
                hi = b; b = a; fb = fa;
                a = hi - gr * (hi - lo);
                fa = cost(a, refl != 0);
            } else {
                lo = a; a = b; fa = fb;
                b = lo + gr * (hi - lo);
                fb = cost(b, refl != 0);
            }
        }
        best = std::min({best, fa, fb});
    }
    return best;
}

// Dense linear solve by Gaussian elimination with partial pivoting, for
// checking library solver output on small systems.
inline Eigen::VectorXd gauss_solve(Eigen::MatrixXd a, Eigen::VectorXd b) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        for (Eigen::Index r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        a.row(col).swap(a.row(pivot));
        std::swap(b(col), b(pivot));
        for (Eigen::Index r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            a.row(r).tail(n - col) -= f * a.row(col).tail(n - col);
            b(r) -= f * b(col);
        }
    }
    Eigen::VectorXd x(n);
    for (Eigen::Index r = n - 1; r >= 0; --r) {
        double s = b(r);
        for (Eigen::Index col = r + 1; col < n; ++col) s -= a(r, col) * x(col);
        x(r) = s / a(r, r);
    }
    return x;
}

// Composite Simpson quadrature of the spiral speed sqrt(1 + t^2).
inline double arc_length_quadrature(double t_lo, double t_hi, int intervals = 4000) {
    auto speed = [](double t) { return std::sqrt(1.0 + t * t); };
    const double h = (t_hi - t_lo) / (2 * intervals);
    double sum = speed(t_lo) + speed(t_hi);
    for (int i = 1; i < 2 * intervals; ++i) {
        sum += speed(t_lo + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

inline Eigen::MatrixXd random_matrix(Eigen::Index rows, Eigen::Index cols,
                                     std::uint64_t seed) {
    lle::Rng rng(seed);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = rng.normal();
    return m;
}

inline lle::PointCloud random_cloud(Eigen::Index dim, Eigen::Index n,
                                    std::uint64_t seed) {
    lle::PointCloud cloud;
    cloud.points = random_matrix(dim, n, seed);
    cloud.seed = seed;
    return cloud;
}

}  // namespace testsupport
