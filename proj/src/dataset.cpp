#include "lle/dataset.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "lle/errors.hpp"
#include "lle/rng.hpp"

namespace lle {

ParamRect default_hole() {
    const double tc = 0.5 * (kRollTMin + kRollTMax);
    const double hc = 0.5 * (kRollHMin + kRollHMax);
    const double th = (kRollTMax - kRollTMin) / 6.0;
    const double hh = (kRollHMax - kRollHMin) / 6.0;
    return {tc - th, tc + th, hc - hh, hc + hh};
}

double arc_length(double t) {
    // Antiderivative of sqrt(1 + tau^2).
    auto f = [](double tau) {
        return 0.5 * (tau * std::sqrt(1.0 + tau * tau) + std::asinh(tau));
    };
    return f(t) - f(kRollTMin);
}

PointCloud gen_swiss_roll_hole(Eigen::Index n, std::uint64_t seed,
                               std::optional<ParamRect> hole) {
    if (n < 1) throw ConfigError("gen_swiss_roll_hole: n must be >= 1");
    if (hole) {
        if (!std::isfinite(hole->t_min) || !std::isfinite(hole->t_max) ||
            !std::isfinite(hole->h_min) || !std::isfinite(hole->h_max)) {
            throw ConfigError("gen_swiss_roll_hole: non-finite hole bounds");
        }
        if (hole->t_min <= kRollTMin && hole->t_max >= kRollTMax &&
            hole->h_min <= kRollHMin && hole->h_max >= kRollHMax) {
            throw ConfigError("gen_swiss_roll_hole: empty support");
        }
    }

    PointCloud cloud;
    cloud.points.resize(3, n);
    Eigen::MatrixXd params(n, 2);
    cloud.seed = seed;

    Rng rng(seed);
    for (Eigen::Index i = 0; i < n; ++i) {
        double t, h;
        do {
            t = rng.uniform(kRollTMin, kRollTMax);
            h = rng.uniform(kRollHMin, kRollHMax);
        } while (hole && hole->contains(t, h));
        cloud.points(0, i) = t * std::cos(t);
        cloud.points(1, i) = h;
        cloud.points(2, i) = t * std::sin(t);
        params(i, 0) = arc_length(t);
        params(i, 1) = h;
    }
    cloud.params = std::move(params);
    return cloud;
}

EmbeddingOp make_isometric_embedding(Eigen::Index d_in, Eigen::Index d_out,
                                     std::uint64_t seed) {
    if (d_in < 1 || d_out < d_in) {
        throw ConfigError("make_isometric_embedding: need d_out >= d_in >= 1");
    }
    Rng rng(seed);
    Eigen::MatrixXd g(d_out, d_in);
    for (Eigen::Index c = 0; c < d_in; ++c)
        for (Eigen::Index r = 0; r < d_out; ++r) g(r, c) = rng.normal();

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(d_out, d_in);
    return {EmbeddingKind::Isometric, std::move(q), 0.0};
}

EmbeddingOp make_extra_dim_sine(Eigen::Index d_in, double amplitude) {
    return {EmbeddingKind::ExtraDimSine, Eigen::MatrixXd::Identity(d_in, d_in), amplitude};
}

EmbeddingOp make_per_coord_sine(Eigen::Index d_in, double amplitude) {
    return {EmbeddingKind::PerCoordSine, Eigen::MatrixXd::Identity(d_in, d_in), amplitude};
}

PointCloud apply_embedding(const EmbeddingOp& op, const PointCloud& cloud) {
    if (op.in_dim() != cloud.dim()) {
        throw ConfigError("apply_embedding: operation expects dimension " +
                          std::to_string(op.in_dim()) + ", cloud has " +
                          std::to_string(cloud.dim()));
    }
    PointCloud out;
    out.params = cloud.params;
    out.seed = cloud.seed;

    switch (op.kind) {
        case EmbeddingKind::Isometric:
            out.points = op.matrix * cloud.points;
            break;
        case EmbeddingKind::ExtraDimSine: {
            const Eigen::Index d = cloud.dim();
            out.points.resize(d + 1, cloud.size());
            out.points.topRows(d) = cloud.points;
            out.points.row(d) =
                (op.amplitude * cloud.points.colwise().sum().array().sin()).matrix();
            break;
        }
        case EmbeddingKind::PerCoordSine:
            out.points = cloud.points + op.amplitude * cloud.points.array().sin().matrix();
            break;
    }
    return out;
}

}  // namespace lle
