#pragma once

#include <Eigen/Core>

#include "lle/neighbors.hpp"
#include "lle/point_cloud.hpp"
#include "lle/spectral.hpp"
#include "lle/weights.hpp"

namespace lle {

// Analytic solution of the embedding problem built directly from the data
// Gram matrix X X^T, with no reference to the alignment matrix M. Y = A X is
// an orthogonal projection of the input onto the top-d eigenvector span,
// followed by per-coordinate rescaling; when every point is exactly
// reconstructed by its weighted neighbors this is a certified minimizer.
struct ProjectionPattern {
    Eigen::MatrixXd a;                // d x D
    Eigen::MatrixXd y;                // d x N, Y = A X
    Eigen::VectorXd top_eigenvalues;  // of X X^T, descending, all positive
    double cost = 0.0;                // sum_i ||y_i - sum_j w_j y_{i_j}||^2
    double constraint_error = 0.0;    // ||Y Y^T - I||_F
    bool reconstruction_certified = false;  // max weight residual <= 1e-8 * diameter
};

// Top-d eigenpairs of X X^T, descending, eigenvalues all positive. Throws
// NumericalError when the d-th singular value of X falls at or below 1e-10
// times the largest (the data has no rank-d linear core to project onto).
EigenPairs data_gram_top_eigs(const PointCloud& cloud, int d);

ProjectionPattern projection_pattern(const PointCloud& cloud,
                                     const NeighborGraph& graph,
                                     const WeightSet& weights, int d);

// Exact cost and constraint evaluation for ANY candidate Y, used both for
// projection patterns and for spectral outputs.
struct SolutionCertificate {
    double cost = 0.0;              // ||(I - W) Y^T||_F^2
    double constraint_error = 0.0;  // ||Y Y^T - I||_F
};

SolutionCertificate verify_solution(const Eigen::MatrixXd& y,
                                    const AlignmentMatrix& alignment);

// Same column layout as save_embedding_csv (y1..yd rows, '#' metadata lines
// carrying the certificate quantities), so patterns and spectral outputs can
// be plotted and diffed with the same tooling.
void save_pattern_csv(const ProjectionPattern& pattern, const std::string& path);

}  // namespace lle
