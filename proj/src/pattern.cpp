#include "lle/pattern.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "lle/errors.hpp"

namespace lle {

EigenPairs data_gram_top_eigs(const PointCloud& cloud, int d) {
    const Eigen::Index dim = cloud.dim();
    if (d < 1) throw ConfigError("data_gram_top_eigs: d must be >= 1");

    Eigen::MatrixXd g = cloud.points * cloud.points.transpose();
    g = 0.5 * (g + g.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    if (es.info() != Eigen::Success) {
        throw NumericalError("data_gram_top_eigs: eigendecomposition failed");
    }

    const double s_max = std::sqrt(std::max(es.eigenvalues()(dim - 1), 0.0));
    if (d > dim || d > cloud.size() ||
        std::sqrt(std::max(es.eigenvalues()(dim - d), 0.0)) <= 1e-10 * s_max) {
        throw NumericalError("data_gram_top_eigs: rank(X) below target dimension d");
    }

    EigenPairs top;
    top.values.resize(d);
    top.vectors.resize(dim, d);
    for (int l = 0; l < d; ++l) {
        top.values(l) = es.eigenvalues()(dim - 1 - l);
        top.vectors.col(l) = es.eigenvectors().col(dim - 1 - l);
        Eigen::Index imax = 0;
        top.vectors.col(l).cwiseAbs().maxCoeff(&imax);
        if (top.vectors(imax, l) < 0.0) top.vectors.col(l) = -top.vectors.col(l);
    }
    return top;
}

ProjectionPattern projection_pattern(const PointCloud& cloud,
                                     const NeighborGraph& graph,
                                     const WeightSet& weights, int d) {
    const Eigen::Index n = cloud.size();
    if (graph.size() != n || weights.weights.rows() != n) {
        throw ConfigError("projection_pattern: shape mismatch");
    }

    EigenPairs top = data_gram_top_eigs(cloud, d);

    ProjectionPattern pattern;
    pattern.top_eigenvalues = top.values;
    pattern.a = top.values.cwiseSqrt().cwiseInverse().asDiagonal() * top.vectors.transpose();
    pattern.y = pattern.a * cloud.points;

    double cost = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd rec = Eigen::VectorXd::Zero(d);
        for (int j = 0; j < graph.k; ++j)
            rec += weights.weights(i, j) * pattern.y.col(graph.indices(i, j));
        cost += (pattern.y.col(i) - rec).squaredNorm();
    }
    pattern.cost = cost;
    pattern.constraint_error =
        (pattern.y * pattern.y.transpose() - Eigen::MatrixXd::Identity(d, d)).norm();
    pattern.reconstruction_certified = weights.residuals.maxCoeff() <= 1e-8 * diameter(cloud);
    return pattern;
}

void save_pattern_csv(const ProjectionPattern& pattern, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);

    const Eigen::Index d = pattern.y.rows();
    const Eigen::Index n = pattern.y.cols();
    char buf[40];
    out << "# top_eigenvalues";
    for (Eigen::Index l = 0; l < pattern.top_eigenvalues.size(); ++l) {
        std::snprintf(buf, sizeof(buf), "%.17g", pattern.top_eigenvalues(l));
        out << ',' << buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", pattern.cost);
    out << "\n# cost," << buf;
    std::snprintf(buf, sizeof(buf), "%.17g", pattern.constraint_error);
    out << "\n# constraint_error," << buf;
    out << "\n# reconstruction_certified," << (pattern.reconstruction_certified ? 1 : 0)
        << '\n';

    for (Eigen::Index r = 0; r < d; ++r) {
        if (r) out << ',';
        out << 'y' << (r + 1);
    }
    out << '\n';
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index r = 0; r < d; ++r) {
            if (r) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", pattern.y(r, i));
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw ConfigError("write failed: " + path);
}

SolutionCertificate verify_solution(const Eigen::MatrixXd& y,
                                    const AlignmentMatrix& alignment) {
    if (y.cols() != alignment.size()) throw ConfigError("verify_solution: shape mismatch");
    const Eigen::Index d = y.rows();

    SolutionCertificate cert;
    Eigen::MatrixXd yt = y.transpose();
    cert.cost = (yt - alignment.w * yt).squaredNorm();
    cert.constraint_error =
        (y * y.transpose() - Eigen::MatrixXd::Identity(d, d)).norm();
    return cert;
}

}  // namespace lle
