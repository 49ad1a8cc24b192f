#include "experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lle/dataset.hpp"
#include "lle/errors.hpp"
#include "lle/neighbors.hpp"
#include "svg.hpp"

namespace lle {

namespace fs = std::filesystem;

std::string to_string(EmbedChoice choice) {
    switch (choice) {
        case EmbedChoice::None: return "none";
        case EmbedChoice::E1: return "e1";
        case EmbedChoice::E2: return "e2";
        case EmbedChoice::E3: return "e3";
    }
    return "?";
}

EmbedChoice embed_from_string(const std::string& name) {
    if (name == "none") return EmbedChoice::None;
    if (name == "e1") return EmbedChoice::E1;
    if (name == "e2") return EmbedChoice::E2;
    if (name == "e3") return EmbedChoice::E3;
    throw ConfigError("unknown embedding '" + name + "' (expected none|e1|e2|e3)");
}

void validate(const ExperimentConfig& config) {
    if (config.n_points < 1) throw ConfigError("config: n must be >= 1");
    if (config.k < 1 || config.k >= config.n_points) {
        throw ConfigError("config: k must satisfy 1 <= k <= n-1 (k=" +
                          std::to_string(config.k) + ", n=" +
                          std::to_string(config.n_points) + ")");
    }
    if (config.d < 1 || config.d + 1 > config.n_points) {
        throw ConfigError("config: d must satisfy 1 <= d <= n-1");
    }
    if (config.mode == WeightMode::Kind::Regularized && !(config.eps_ratio > 0.0)) {
        throw ConfigError("config: eps_ratio must be > 0 in regularized mode");
    }
    if (config.embed != EmbedChoice::None && config.d_out < 3) {
        throw ConfigError("config: dout must be >= 3 for embedded runs");
    }
    if (config.out_dir.empty()) throw ConfigError("config: out directory missing");
}

PointCloud make_experiment_cloud(const ExperimentConfig& config) {
    PointCloud roll = gen_swiss_roll_hole(
        config.n_points, config.seed,
        config.hole ? std::optional<ParamRect>(default_hole()) : std::nullopt);
    if (config.embed == EmbedChoice::None) return roll;

    EmbeddingOp e1 = make_isometric_embedding(3, config.d_out, config.seed + 1);
    PointCloud cloud = apply_embedding(e1, roll);
    if (config.embed == EmbedChoice::E2) {
        cloud = apply_embedding(make_extra_dim_sine(config.d_out), cloud);
    } else if (config.embed == EmbedChoice::E3) {
        cloud = apply_embedding(make_per_coord_sine(config.d_out), cloud);
    }
    return cloud;
}

namespace {

WeightMode weight_mode(const ExperimentConfig& config) {
    return config.mode == WeightMode::Kind::Exact
               ? WeightMode::exact()
               : WeightMode::regularized(config.eps_ratio);
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void cmd_generate(const ExperimentConfig& config) {
    validate(config);
    fs::create_directories(config.out_dir);
    PointCloud roll = gen_swiss_roll_hole(
        config.n_points, config.seed,
        config.hole ? std::optional<ParamRect>(default_hole()) : std::nullopt);
    save_csv(roll, (fs::path(config.out_dir) / "swissroll.csv").string());
}

std::string report_csv_header() {
    return "schema_version,n,seed,k,d,embed,dout,mode,eps_ratio,hole,"
           "affine_fit_residual,procrustes_to_pattern,param_recovery,"
           "null_multiplicity,constant_vector_found,max_weight_residual,diameter,"
           "pattern_cost,pattern_constraint_error,reconstruction_certified,"
           "spectral_cost,spectral_constraint_error";
}

std::string report_csv_row(const ExperimentConfig& config, const RunOutput& run) {
    std::string row;
    row += std::to_string(kReportSchemaVersion);
    row += ',' + std::to_string(config.n_points);
    row += ',' + std::to_string(config.seed);
    row += ',' + std::to_string(config.k);
    row += ',' + std::to_string(config.d);
    row += ',' + to_string(config.embed);
    row += ',' + std::to_string(config.d_out);
    row += ',';
    row += config.mode == WeightMode::Kind::Exact ? "exact" : "reg";
    row += ',' + fmt_double(config.eps_ratio);
    row += ',' + std::to_string(config.hole ? 1 : 0);
    row += ',' + fmt_double(run.report.affine_fit_residual);
    row += ',' + fmt_double(run.report.procrustes_to_pattern);
    row += ',' + fmt_double(run.report.param_recovery);
    row += ',' + std::to_string(run.report.null_multiplicity);
    row += ',' + std::to_string(run.report.constant_vector_found ? 1 : 0);
    row += ',' + fmt_double(run.max_weight_residual);
    row += ',' + fmt_double(run.diameter);
    row += ',' + fmt_double(run.pattern_cert.cost);
    row += ',' + fmt_double(run.pattern_cert.constraint_error);
    row += ',' + std::to_string(run.reconstruction_certified ? 1 : 0);
    row += ',' + fmt_double(run.spectral_cert.cost);
    row += ',' + fmt_double(run.spectral_cert.constraint_error);
    return row;
}

RunOutput cmd_run(const ExperimentConfig& config) {
    validate(config);
    fs::create_directories(config.out_dir);

    PointCloud cloud = make_experiment_cloud(config);
    NeighborGraph graph = knn(cloud, config.k);
    WeightSet weights = compute_weight_set(cloud, graph, weight_mode(config));
    AlignmentMatrix alignment = build_alignment(graph, weights);

    RunOutput run;
    run.embedding = embed_from_alignment(alignment, config.d);
    run.spectral_cert = verify_solution(run.embedding.y, alignment);

    ProjectionPattern pattern = projection_pattern(cloud, graph, weights, config.d);
    run.pattern_cert = {pattern.cost, pattern.constraint_error};
    run.reconstruction_certified = pattern.reconstruction_certified;
    run.max_weight_residual = weights.residuals.maxCoeff();
    run.diameter = diameter(cloud);

    // Diagnostics that are undefined for a given shape degrade to NaN in the
    // report instead of failing the run.
    run.report.affine_fit_residual =
        cloud.size() > cloud.dim() + 1
            ? affine_fit_residual(cloud.points, run.embedding.y)
            : std::nan("");
    run.report.procrustes_to_pattern = procrustes_distance(run.embedding.y, pattern.y);
    run.report.param_recovery =
        (cloud.params && config.d == 2) ? param_recovery_score(run.embedding, cloud)
                                        : std::nan("");
    run.report.null_multiplicity = run.embedding.null_multiplicity;
    run.report.constant_vector_found = run.embedding.constant_vector_found;

    fs::path out(config.out_dir);
    save_embedding_csv(run.embedding, (out / "embedding.csv").string());
    {
        std::ofstream rep((out / "report.csv").string(), std::ios::binary);
        if (!rep) throw ConfigError("cannot open for writing: " + (out / "report.csv").string());
        rep << report_csv_header() << '\n' << report_csv_row(config, run) << '\n';
    }
    std::optional<Eigen::VectorXd> color;
    if (cloud.params) color = cloud.params->col(0);
    write_scatter_svg((out / "scatter.svg").string(), run.embedding.y, color);
    return run;
}

void cmd_sweep_eps(const ExperimentConfig& config, const std::vector<double>& eps_ratios) {
    if (eps_ratios.empty()) throw ConfigError("sweep: eps ratio list is empty");
    for (double ratio : eps_ratios) {
        if (!(ratio > 0.0)) throw ConfigError("sweep: eps ratios must be > 0");
    }
    validate(config);
    fs::create_directories(config.out_dir);

    std::string summary = "eps_ratio,affine_fit_residual\n";
    for (double ratio : eps_ratios) {
        ExperimentConfig sub = config;
        sub.mode = WeightMode::Kind::Regularized;
        sub.eps_ratio = ratio;
        char name[48];
        std::snprintf(name, sizeof(name), "eps_%g", ratio);
        sub.out_dir = (fs::path(config.out_dir) / name).string();
        RunOutput run = cmd_run(sub);
        char line[96];
        std::snprintf(line, sizeof(line), "%.17g,%.17g\n", ratio,
                      run.report.affine_fit_residual);
        summary += line;
    }
    std::ofstream out((fs::path(config.out_dir) / "sweep_summary.csv").string(),
                      std::ios::binary);
    if (!out) throw ConfigError("cannot open sweep summary for writing");
    out << summary;
}

}  // namespace lle
