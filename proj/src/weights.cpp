#include "lle/weights.hpp"

#include <Eigen/Dense>
#include <string>

#include "lle/errors.hpp"

namespace lle {

LocalGram local_gram(const PointCloud& cloud, const NeighborGraph& graph,
                     Eigen::Index i) {
    if (i < 0 || i >= graph.size()) throw ConfigError("local_gram: index out of range");
    const int k = graph.k;
    Eigen::MatrixXd z(cloud.dim(), k);
    for (int j = 0; j < k; ++j)
        z.col(j) = cloud.points.col(graph.indices(i, j)) - cloud.points.col(i);

    LocalGram gram;
    Eigen::MatrixXd c = z.transpose() * z;
    gram.matrix = 0.5 * (c + c.transpose());
    gram.trace = gram.matrix.trace();
    return gram;
}

WeightMode WeightMode::regularized(double eps_ratio) {
    if (!(eps_ratio > 0.0)) throw ConfigError("WeightMode: eps_ratio must be > 0");
    return {Kind::Regularized, eps_ratio};
}

Eigen::VectorXd solve_weights_exact(const LocalGram& gram) {
    const Eigen::Index k = gram.matrix.rows();
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(k);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram.matrix);
    if (es.info() != Eigen::Success) {
        throw NumericalError("solve_weights_exact: eigendecomposition failed");
    }
    const Eigen::VectorXd& vals = es.eigenvalues();
    const Eigen::MatrixXd& vecs = es.eigenvectors();
    const Eigen::VectorXd c = vecs.transpose() * ones;
    const double sing_tol = kSingularEigRatio * gram.trace;

    Eigen::VectorXd w;
    if (gram.trace > 0.0 && vals(0) > sing_tol) {
        // unique solution C^{-1} 1 / (1^T C^{-1} 1)
        Eigen::VectorXd y = vecs * (c.array() / vals.array()).matrix();
        w = y / ones.dot(y);
    } else {
        // Minimum-norm solution of the singular stationarity system: project
        // 1_k onto the null space; if 1_k is orthogonal to it, fall back to
        // the pseudo-inverse applied on the numerical range.
        Eigen::VectorXd z = Eigen::VectorXd::Zero(k);
        Eigen::VectorXd y = Eigen::VectorXd::Zero(k);
        for (Eigen::Index a = 0; a < k; ++a) {
            if (vals(a) <= sing_tol) {
                z += c(a) * vecs.col(a);
            } else {
                y += (c(a) / vals(a)) * vecs.col(a);
            }
        }
        const double z_dot = ones.dot(z);  // == ||z||^2 up to rounding
        if (z_dot > static_cast<double>(k) * 1e-18) {
            w = z / z_dot;
        } else {
            const double y_dot = ones.dot(y);
            if (!(y_dot > 0.0)) {
                throw NumericalError("solve_weights_exact: infeasible stationarity");
            }
            w = y / y_dot;
        }
    }
    if (!w.allFinite()) throw NumericalError("solve_weights_exact: non-finite weights");
    return w;
}

Eigen::VectorXd solve_weights_regularized(const LocalGram& gram, double eps_ratio) {
    if (!(eps_ratio > 0.0)) {
        throw ConfigError("solve_weights_regularized: eps_ratio must be > 0");
    }
    const Eigen::Index k = gram.matrix.rows();
    const double eps = gram.trace > 0.0 ? eps_ratio * gram.trace : eps_ratio;
    Eigen::MatrixXd c = gram.matrix;
    c.diagonal().array() += eps;

    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(k);
    Eigen::VectorXd y = c.ldlt().solve(ones);
    Eigen::VectorXd w = y / ones.dot(y);
    if (!w.allFinite()) throw NumericalError("solve_weights_regularized: non-finite weights");
    return w;
}

WeightSet compute_weight_set(const PointCloud& cloud, const NeighborGraph& graph,
                             const WeightMode& mode) {
    const Eigen::Index n = graph.size();
    if (n != cloud.size()) throw ConfigError("compute_weight_set: graph/cloud size mismatch");
    if (mode.kind == WeightMode::Kind::Regularized && !(mode.eps_ratio > 0.0)) {
        throw ConfigError("compute_weight_set: eps_ratio must be > 0");
    }
    const int k = graph.k;

    WeightSet set;
    set.mode = mode;
    set.weights.resize(n, k);
    set.residuals.resize(n);

    for (Eigen::Index i = 0; i < n; ++i) {
        LocalGram gram = local_gram(cloud, graph, i);
        Eigen::VectorXd w;
        try {
            w = mode.kind == WeightMode::Kind::Exact
                    ? solve_weights_exact(gram)
                    : solve_weights_regularized(gram, mode.eps_ratio);
        } catch (const Error& e) {
            throw NumericalError("compute_weight_set: point " + std::to_string(i) +
                                 ": " + e.what());
        }
        set.weights.row(i) = w.transpose();

        Eigen::VectorXd rec = Eigen::VectorXd::Zero(cloud.dim());
        for (int j = 0; j < k; ++j) rec += w(j) * cloud.points.col(graph.indices(i, j));
        set.residuals(i) = (cloud.points.col(i) - rec).norm();
    }
    return set;
}

}  // namespace lle
