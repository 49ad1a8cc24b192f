#include "lle/spectral.hpp"

#include <Eigen/Dense>
#include <cstdio>
#include <fstream>
#include <vector>

#include "lle/errors.hpp"
#include "lle/neighbors.hpp"

namespace lle {

AlignmentMatrix build_alignment(const NeighborGraph& graph, const WeightSet& weights) {
    const Eigen::Index n = graph.size();
    const int k = graph.k;
    if (weights.weights.rows() != n || weights.weights.cols() != k) {
        throw ConfigError("build_alignment: weight/graph shape mismatch");
    }

    std::vector<Eigen::Triplet<double>> w_trip;
    std::vector<Eigen::Triplet<double>> imw_trip;
    w_trip.reserve(static_cast<size_t>(n) * k);
    imw_trip.reserve(static_cast<size_t>(n) * (k + 1));
    for (Eigen::Index i = 0; i < n; ++i) {
        imw_trip.emplace_back(i, i, 1.0);
        for (int j = 0; j < k; ++j) {
            const int s = graph.indices(i, j);
            const double wij = weights.weights(i, j);
            w_trip.emplace_back(i, s, wij);
            imw_trip.emplace_back(i, s, -wij);
        }
    }

    AlignmentMatrix out;
    out.w.resize(n, n);
    out.w.setFromTriplets(w_trip.begin(), w_trip.end());
    Eigen::SparseMatrix<double> imw(n, n);
    imw.setFromTriplets(imw_trip.begin(), imw_trip.end());
    out.m = imw.transpose() * imw;
    out.m.makeCompressed();
    return out;
}

EigenPairs bottom_eigs(const Eigen::SparseMatrix<double>& m_matrix,
                       Eigen::Index count, double tol) {
    const Eigen::Index n = m_matrix.rows();
    if (count < 1 || count > n) throw ConfigError("bottom_eigs: count out of range");

    Eigen::MatrixXd dense(m_matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    if (es.info() != Eigen::Success) {
        throw NumericalError("bottom_eigs: eigensolver did not converge");
    }

    EigenPairs pairs;
    pairs.values = es.eigenvalues().head(count);
    pairs.vectors = es.eigenvectors().leftCols(count);

    // Reproducible orientation: largest-magnitude entry positive.
    for (Eigen::Index j = 0; j < count; ++j) {
        Eigen::Index imax = 0;
        pairs.vectors.col(j).cwiseAbs().maxCoeff(&imax);
        if (pairs.vectors(imax, j) < 0.0) pairs.vectors.col(j) = -pairs.vectors.col(j);
    }

    const double m_norm = dense.norm();
    double worst = 0.0;
    for (Eigen::Index j = 0; j < count; ++j) {
        double r = (m_matrix * pairs.vectors.col(j) - pairs.values(j) * pairs.vectors.col(j))
                       .norm();
        if (r > worst) worst = r;
    }
    if (worst > tol * m_norm) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "bottom_eigs: residual %.3e exceeds %.3e (= tol %.1e * ||M|| %.3e)",
                      worst, tol * m_norm, tol, m_norm);
        throw NumericalError(msg);
    }
    return pairs;
}

EmbeddingResult embed_from_alignment(const AlignmentMatrix& alignment, int d) {
    const Eigen::Index n = alignment.size();
    if (d < 1 || d + 1 > n) throw ConfigError("embed_from_alignment: need 1 <= d <= N-1");

    EigenPairs pairs = bottom_eigs(alignment.m, n, 1e-8);

    EmbeddingResult result;
    result.eigenvalues = pairs.values.head(d + 1);
    // Classic selection rule: skip the first eigenvector, keep the next d.
    result.y = pairs.vectors.middleCols(1, d).transpose();

    const double tol_null = 1e-8 * alignment.m.diagonal().mean();
    double proj2 = 0.0;
    int nulls = 0;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (Eigen::Index a = 0; a < n; ++a) {
        if (pairs.values(a) <= tol_null) {
            ++nulls;
            double dot = pairs.vectors.col(a).sum() * inv_sqrt_n;
            proj2 += dot * dot;
        }
    }
    result.null_multiplicity = nulls;
    result.constant_vector_found = std::sqrt(proj2) >= 1.0 - 1e-6;
    return result;
}

EmbeddingResult lle_embed(const PointCloud& cloud, int k, int d,
                          const WeightMode& mode) {
    NeighborGraph graph = knn(cloud, k);
    WeightSet weights = compute_weight_set(cloud, graph, mode);
    AlignmentMatrix alignment = build_alignment(graph, weights);
    return embed_from_alignment(alignment, d);
}

void save_embedding_csv(const EmbeddingResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);

    const Eigen::Index d = result.y.rows();
    const Eigen::Index n = result.y.cols();
    char buf[40];
    out << "# eigenvalues";
    for (Eigen::Index a = 0; a < result.eigenvalues.size(); ++a) {
        std::snprintf(buf, sizeof(buf), "%.17g", result.eigenvalues(a));
        out << ',' << buf;
    }
    out << "\n# null_multiplicity," << result.null_multiplicity;
    out << "\n# constant_vector_found," << (result.constant_vector_found ? 1 : 0) << '\n';

    for (Eigen::Index r = 0; r < d; ++r) {
        if (r) out << ',';
        out << 'y' << (r + 1);
    }
    out << '\n';
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index r = 0; r < d; ++r) {
            if (r) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", result.y(r, i));
            out << buf;
        }
        out << '\n';
    }
    if (!out) throw ConfigError("write failed: " + path);
}

}  // namespace lle
