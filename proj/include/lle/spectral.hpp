#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <string>

#include "lle/point_cloud.hpp"
#include "lle/weights.hpp"

namespace lle {

// Sparse weight matrix W (row i nonzero exactly at the neighbors of i) and
// the alignment matrix M = (I - W)^T (I - W).
struct AlignmentMatrix {
    Eigen::SparseMatrix<double> w;
    Eigen::SparseMatrix<double> m;

    Eigen::Index size() const { return w.rows(); }
};

AlignmentMatrix build_alignment(const NeighborGraph& graph, const WeightSet& weights);

// Eigenpairs in ascending eigenvalue order; eigenvectors are columns, each
// with its largest-magnitude entry made positive.
struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

// The m smallest eigenpairs of the symmetric matrix, via a full dense solve.
// Each returned pair must satisfy ||M g - lambda g|| <= tol * ||M||_F, else
// a NumericalError reports the residual actually achieved.
EigenPairs bottom_eigs(const Eigen::SparseMatrix<double>& m_matrix,
                       Eigen::Index count, double tol);

struct EmbeddingResult {
    Eigen::MatrixXd y;            // d x N, rows orthonormal
    Eigen::VectorXd eigenvalues;  // the d+1 smallest eigenvalues of M, ascending
    int null_multiplicity = 0;    // eigenvalues at or below tol_null
    bool constant_vector_found = false;  // 1/sqrt(N) 1_N lies in the near-null span
};

// Full pipeline: neighbors -> weights -> M -> bottom eigenpairs. Reproduces
// the classic selection rule exactly: the first eigenvector is dropped and
// the next d become the rows of Y, whether or not the first one is the
// constant vector. null_multiplicity counts eigenvalues at or below
// tol_null = 1e-8 * mean(diag M); constant_vector_found reports whether
// 1/sqrt(N) 1_N lies in the span of the near-null eigenvectors (projection
// norm >= 1 - 1e-6), i.e. whether the dropped-vector rule can be trusted.
EmbeddingResult lle_embed(const PointCloud& cloud, int k, int d,
                          const WeightMode& mode);

// Same selection logic applied to an alignment matrix that has already been
// assembled; lle_embed is knn + compute_weight_set + build_alignment + this.
EmbeddingResult embed_from_alignment(const AlignmentMatrix& alignment, int d);

// Rows of Y as columns y1..yd, preceded by '#' metadata lines carrying the
// eigenvalue tail and the degeneracy diagnostics.
void save_embedding_csv(const EmbeddingResult& result, const std::string& path);

}  // namespace lle
