#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <numbers>
#include <optional>

#include "lle/point_cloud.hpp"

namespace lle {

// Parameter domain of the Swiss roll: winding parameter t and height h.
inline constexpr double kRollTMin = 1.5 * std::numbers::pi;
inline constexpr double kRollTMax = 4.5 * std::numbers::pi;
inline constexpr double kRollHMin = 0.0;
inline constexpr double kRollHMax = 21.0;

// Axis-aligned rectangle in (t, h) parameter space.
struct ParamRect {
    double t_min, t_max, h_min, h_max;

    bool contains(double t, double h) const {
        return t >= t_min && t <= t_max && h >= h_min && h <= h_max;
    }
};

// Centered rectangle whose sides are 1/3 of each parameter range (1/9 of the
// parameter area).
ParamRect default_hole();

// Arc length of the spiral t -> (t cos t, t sin t) measured from kRollTMin.
// Together with h this gives an isometric chart of the roll.
double arc_length(double t);

// Samples (t, h) uniformly on the parameter domain, rejecting draws inside
// the hole, and maps them to (t cos t, h, t sin t). params stores (s(t), h).
// Deterministic for a given seed. Pass std::nullopt for a roll without hole.
PointCloud gen_swiss_roll_hole(Eigen::Index n, std::uint64_t seed,
                               std::optional<ParamRect> hole = default_hole());

enum class EmbeddingKind {
    Isometric,      // x -> E x with E's columns orthonormal
    ExtraDimSine,   // x -> (x, a * sin(sum_j x_j)), one extra dimension
    PerCoordSine,   // x -> x + a * (sin(x_1), ..., sin(x_D))
};

struct EmbeddingOp {
    EmbeddingKind kind;
    Eigen::MatrixXd matrix;  // used by Isometric; identity placeholder otherwise
    double amplitude = 0.1;

    Eigen::Index in_dim() const { return matrix.cols(); }
    Eigen::Index out_dim() const {
        return kind == EmbeddingKind::ExtraDimSine ? matrix.cols() + 1 : matrix.rows();
    }
};

// Orthonormalized columns of a seeded Gaussian matrix (d_out x d_in).
EmbeddingOp make_isometric_embedding(Eigen::Index d_in, Eigen::Index d_out,
                                     std::uint64_t seed);

EmbeddingOp make_extra_dim_sine(Eigen::Index d_in, double amplitude = 0.1);
EmbeddingOp make_per_coord_sine(Eigen::Index d_in, double amplitude = 0.1);

// Transforms every sample; params and seed are carried through unchanged.
PointCloud apply_embedding(const EmbeddingOp& op, const PointCloud& cloud);

}  // namespace lle
