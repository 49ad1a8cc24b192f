#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "lle/dataset.hpp"
#include "lle/errors.hpp"
#include "lle/neighbors.hpp"
#include "lle/rng.hpp"
#include "lle/weights.hpp"
#include "test_support.hpp"

using namespace lle;

namespace {

LocalGram gram_of(const Eigen::MatrixXd& c) {
    return {c, c.trace()};
}

// Rank-deficient Gram built from a thin factor.
LocalGram random_singular_gram(Eigen::Index k, Eigen::Index rank, std::uint64_t seed) {
    Eigen::MatrixXd z = testsupport::random_matrix(rank, k, seed);
    Eigen::MatrixXd c = z.transpose() * z;
    return gram_of(0.5 * (c + c.transpose()));
}

}  // namespace

TEST_CASE("local_gram: coincident neighbors give the zero matrix") {
    PointCloud cloud;
    cloud.points = Eigen::MatrixXd::Ones(3, 4);
    NeighborGraph graph;
    graph.k = 3;
    graph.indices.resize(4, 3);
    graph.indices << 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2;
    LocalGram gram = local_gram(cloud, graph, 0);
    CHECK(gram.matrix.norm() == 0.0);
    CHECK(gram.trace == 0.0);
}

TEST_CASE("local_gram: opposite unit neighbors") {
    PointCloud cloud;
    cloud.points.resize(3, 3);
    cloud.points.setZero();
    cloud.points(0, 1) = 1.0;   // x_1 = e1
    cloud.points(0, 2) = -1.0;  // x_2 = -e1
    NeighborGraph graph;
    graph.k = 2;
    graph.indices.resize(3, 2);
    graph.indices << 1, 2, 0, 2, 0, 1;
    LocalGram gram = local_gram(cloud, graph, 0);
    Eigen::MatrixXd expect(2, 2);
    expect << 1.0, -1.0, -1.0, 1.0;
    CHECK((gram.matrix - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("local_gram: matches entrywise summation") {
    PointCloud cloud = testsupport::random_cloud(5, 30, 31);
    NeighborGraph graph = knn(cloud, 7);
    for (Eigen::Index i : {0, 11, 29}) {
        LocalGram gram = local_gram(cloud, graph, i);
        for (int a = 0; a < 7; ++a) {
            for (int b = 0; b < 7; ++b) {
                double sum = 0.0;
                for (Eigen::Index m = 0; m < 5; ++m) {
                    sum += (cloud.points(m, graph.indices(i, a)) - cloud.points(m, i)) *
                           (cloud.points(m, graph.indices(i, b)) - cloud.points(m, i));
                }
                CHECK(gram.matrix(a, b) == doctest::Approx(sum).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("solve_weights_exact: identity gram splits evenly") {
    Eigen::VectorXd w = solve_weights_exact(gram_of(Eigen::MatrixXd::Identity(2, 2)));
    CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w(1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("solve_weights_exact: diagonal gram") {
    Eigen::MatrixXd c = Eigen::Vector2d(1.0, 2.0).asDiagonal();
    Eigen::VectorXd w = solve_weights_exact(gram_of(c));
    CHECK(w(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(w(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("solve_weights_exact: singular midpoint gram") {
    Eigen::MatrixXd c(2, 2);
    c << 1.0, -1.0, -1.0, 1.0;
    Eigen::VectorXd w = solve_weights_exact(gram_of(c));
    CHECK(w(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w(1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("solve_weights_exact: singular case equals the small-eps limit") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        LocalGram gram = random_singular_gram(3, 1, seed);
        Eigen::VectorXd w0 = solve_weights_exact(gram);
        Eigen::VectorXd we = solve_weights_regularized(gram, 1e-9);
        CHECK((w0 - we).norm() < 1e-4);
    }
}

TEST_CASE("solve_weights_exact: stationarity holds in the singular branch") {
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        LocalGram gram = random_singular_gram(6, 2, seed);
        Eigen::VectorXd w = solve_weights_exact(gram);
        const double lambda = w.dot(gram.matrix * w);
        Eigen::VectorXd gap = gram.matrix * w - lambda * Eigen::VectorXd::Ones(6);
        CHECK(gap.cwiseAbs().maxCoeff() <= 1e-8 * gram.trace);
        CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("solve_weights_regularized: zero gram splits evenly") {
    LocalGram gram = gram_of(Eigen::MatrixXd::Zero(4, 4));
    for (double ratio : {1e-1, 1e-3, 1e-9}) {
        Eigen::VectorXd w = solve_weights_regularized(gram, ratio);
        for (int j = 0; j < 4; ++j) CHECK(w(j) == doctest::Approx(0.25).epsilon(1e-14));
    }
}

TEST_CASE("solve_weights_regularized: hand-computed diagonal case") {
    Eigen::MatrixXd c = Eigen::Vector2d(1.0, 2.0).asDiagonal();
    Eigen::VectorXd w = solve_weights_regularized(gram_of(c), 1e-3);
    // eps = 1e-3 * 3, components proportional to 1/1.003 and 1/2.003
    const double c1 = 1.0 / 1.003, c2 = 1.0 / 2.003;
    CHECK(w(0) == doctest::Approx(c1 / (c1 + c2)).epsilon(1e-12));
    CHECK(w(1) == doctest::Approx(c2 / (c1 + c2)).epsilon(1e-12));
}

TEST_CASE("solve_weights_regularized: error decreases with the ratio") {
    for (std::uint64_t seed : {41u, 42u, 43u}) {
        Eigen::MatrixXd g = testsupport::random_matrix(6, 6, seed);
        Eigen::MatrixXd c = g.transpose() * g + 0.1 * Eigen::MatrixXd::Identity(6, 6);
        LocalGram gram = gram_of(0.5 * (c + c.transpose()));
        Eigen::VectorXd w_exact = solve_weights_exact(gram);
        double prev = std::numeric_limits<double>::infinity();
        for (double ratio : {1e-2, 1e-4, 1e-6}) {
            double err = (solve_weights_regularized(gram, ratio) - w_exact).norm();
            CHECK(err <= prev * (1.0 + 1e-9));
            prev = err;
        }
        CHECK(prev < 1e-3);
    }
}

TEST_CASE("solve_weights_regularized: continuity under halving") {
    LocalGram gram = random_singular_gram(8, 3, 51);
    double eps = 1e-3;
    double prev_gap = (solve_weights_regularized(gram, eps) -
                       solve_weights_regularized(gram, eps / 2)).norm();
    for (int step = 0; step < 6; ++step) {
        eps /= 2;
        double gap = (solve_weights_regularized(gram, eps) -
                      solve_weights_regularized(gram, eps / 2)).norm();
        CHECK(gap <= 0.75 * prev_gap + 1e-12);
        prev_gap = gap;
    }
}

TEST_CASE("solve_weights_regularized: matches an elimination solve on roll data") {
    PointCloud cloud = gen_swiss_roll_hole(80, 67);
    NeighborGraph graph = knn(cloud, 12);
    for (Eigen::Index i : {0, 33, 79}) {
        LocalGram gram = local_gram(cloud, graph, i);
        Eigen::VectorXd w = solve_weights_regularized(gram, 1e-3);

        Eigen::MatrixXd shifted = gram.matrix;
        shifted.diagonal().array() += 1e-3 * gram.trace;
        Eigen::VectorXd y = testsupport::gauss_solve(shifted, Eigen::VectorXd::Ones(12));
        Eigen::VectorXd expect = y / y.sum();
        CHECK((w - expect).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("solve_weights_regularized: requires positive ratio") {
    LocalGram gram = gram_of(Eigen::MatrixXd::Identity(3, 3));
    CHECK_THROWS_AS(solve_weights_regularized(gram, 0.0), ConfigError);
    CHECK_THROWS_AS(solve_weights_regularized(gram, -1e-3), ConfigError);
}

TEST_CASE("weights: rows sum to one on random neighborhoods") {
    // Mix of well-conditioned, rank-deficient and zero Gram matrices.
    Rng rng(606);
    for (int trial = 0; trial < 1000; ++trial) {
        const Eigen::Index k = 2 + static_cast<Eigen::Index>(rng.uniform() * 11);
        const Eigen::Index rank =
            trial % 3 == 0 ? std::max<Eigen::Index>(1, k / 3) : k + 2;
        LocalGram gram = trial % 7 == 0
                             ? gram_of(Eigen::MatrixXd::Zero(k, k))
                             : random_singular_gram(k, std::min(rank, k + 2),
                                                    9000 + static_cast<std::uint64_t>(trial));
        Eigen::VectorXd we = solve_weights_exact(gram);
        Eigen::VectorXd wr = solve_weights_regularized(gram, 1e-3);
        CHECK(std::abs(we.sum() - 1.0) < 1e-10);
        CHECK(std::abs(wr.sum() - 1.0) < 1e-10);
    }
}

TEST_CASE("weights: regularized solution is rigid-motion invariant") {
    PointCloud cloud = testsupport::random_cloud(3, 25, 71);
    NeighborGraph graph = knn(cloud, 6);

    // Random rotation (QR of a Gaussian matrix) plus translation.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(testsupport::random_matrix(3, 3, 72));
    Eigen::MatrixXd q = qr.householderQ();
    PointCloud moved;
    moved.points = (q * cloud.points).colwise() + Eigen::Vector3d(4.0, -2.0, 9.0);

    for (Eigen::Index i : {0, 7, 24}) {
        Eigen::VectorXd w0 = solve_weights_regularized(local_gram(cloud, graph, i), 1e-3);
        Eigen::VectorXd w1 = solve_weights_regularized(local_gram(moved, graph, i), 1e-3);
        CHECK((w0 - w1).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("compute_weight_set: exact reconstruction on the 3-D roll with k > D") {
    PointCloud cloud = gen_swiss_roll_hole(300, 13);
    NeighborGraph graph = knn(cloud, 12);
    WeightSet set = compute_weight_set(cloud, graph, WeightMode::exact());
    CHECK(set.residuals.maxCoeff() <= 1e-8 * diameter(cloud));
    for (Eigen::Index i = 0; i < 300; ++i)
        CHECK(std::abs(set.weights.row(i).sum() - 1.0) < 1e-10);
}

TEST_CASE("compute_weight_set: exact reconstruction persists under E1") {
    PointCloud roll = gen_swiss_roll_hole(300, 13);
    PointCloud cloud = apply_embedding(make_isometric_embedding(3, 18, 14), roll);
    NeighborGraph graph = knn(cloud, 12);
    WeightSet set = compute_weight_set(cloud, graph, WeightMode::exact());
    CHECK(set.residuals.maxCoeff() <= 1e-8 * diameter(cloud));
}

TEST_CASE("compute_weight_set: E3 leaves genuine residuals") {
    PointCloud roll = gen_swiss_roll_hole(300, 13);
    PointCloud base = apply_embedding(make_isometric_embedding(3, 18, 14), roll);
    PointCloud cloud = apply_embedding(make_per_coord_sine(18), base);
    NeighborGraph graph = knn(cloud, 12);
    WeightSet set = compute_weight_set(cloud, graph, WeightMode::exact());
    CHECK(set.residuals.maxCoeff() > 1e-4 * diameter(cloud));
}
