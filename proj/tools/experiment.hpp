#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lle/diagnostics.hpp"
#include "lle/pattern.hpp"
#include "lle/spectral.hpp"
#include "lle/weights.hpp"

namespace lle {

enum class EmbedChoice { None, E1, E2, E3 };

std::string to_string(EmbedChoice choice);
EmbedChoice embed_from_string(const std::string& name);

struct ExperimentConfig {
    Eigen::Index n_points = 1000;
    std::uint64_t seed = 1;
    int k = 12;
    int d = 2;
    EmbedChoice embed = EmbedChoice::None;
    int d_out = 18;  // isometric target dimension, used when embed != None
    WeightMode::Kind mode = WeightMode::Kind::Regularized;
    double eps_ratio = 1e-3;
    bool hole = true;
    std::string out_dir = "out";
};

// Throws ConfigError on inconsistent settings (k >= n, bad eps, ...).
void validate(const ExperimentConfig& config);

// The high-dimensional dataset the config describes: Swiss roll, optionally
// pushed through E1/E2/E3. The isometric map is seeded with config.seed + 1
// so data and embedding draw from independent streams.
PointCloud make_experiment_cloud(const ExperimentConfig& config);

// Writes <out>/swissroll.csv (the raw 3-D roll with its chart columns).
void cmd_generate(const ExperimentConfig& config);

struct RunOutput {
    DiagnosticsReport report;
    EmbeddingResult embedding;
    SolutionCertificate spectral_cert;
    SolutionCertificate pattern_cert;  // cost/constraint of the projection pattern
    bool reconstruction_certified = false;
    double max_weight_residual = 0.0;
    double diameter = 0.0;
};

// Full experiment: data -> LLE -> diagnostics. Writes <out>/embedding.csv,
// <out>/report.csv and <out>/scatter.svg.
RunOutput cmd_run(const ExperimentConfig& config);

// One regularized run per ratio, each in <out>/eps_<ratio>/, plus
// <out>/sweep_summary.csv with the affine-fit residual per ratio.
void cmd_sweep_eps(const ExperimentConfig& config, const std::vector<double>& eps_ratios);

// report.csv column list, documented in the README. Bump when columns change.
inline constexpr int kReportSchemaVersion = 1;
std::string report_csv_header();
std::string report_csv_row(const ExperimentConfig& config, const RunOutput& run);

}  // namespace lle
