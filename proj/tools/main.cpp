#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "lle/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Locally linear embedding experiments on the Swiss roll with a hole"};
    app.require_subcommand(1);
    app.fallthrough(true);  // shared flags may follow the subcommand name

    lle::ExperimentConfig config;
    std::string embed = "none";
    std::string mode = "reg";
    std::vector<double> eps_ratios;

    app.add_option("--n", config.n_points, "number of samples");
    app.add_option("--seed", config.seed, "random seed");
    app.add_option("--k", config.k, "neighbors per point");
    app.add_option("--d", config.d, "embedding dimension");
    app.add_option("--embed", embed, "high-dimensional embedding")
        ->check(CLI::IsMember({"none", "e1", "e2", "e3"}));
    app.add_option("--dout", config.d_out, "isometric embedding dimension");
    app.add_option("--mode", mode, "weight solver")
        ->check(CLI::IsMember({"exact", "reg"}));
    app.add_option("--eps-ratio", config.eps_ratio,
                   "regularization as a fraction of trace(C_i)");
    app.add_flag("--hole,!--no-hole", config.hole, "cut the default hole");
    app.add_option("--out", config.out_dir, "output directory");
    app.set_config("--config", "", "key=value config file; flags override");

    CLI::App* gen = app.add_subcommand("generate", "write the raw Swiss-roll CSV");
    CLI::App* run = app.add_subcommand("run", "run one LLE experiment");
    CLI::App* sweep = app.add_subcommand("sweep", "run a regularization sweep");
    sweep->add_option("--eps-ratios", eps_ratios, "comma-separated ratios to sweep")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config.embed = lle::embed_from_string(embed);
        config.mode = mode == "exact" ? lle::WeightMode::Kind::Exact
                                      : lle::WeightMode::Kind::Regularized;
        if (gen->parsed()) {
            lle::cmd_generate(config);
        } else if (run->parsed()) {
            lle::cmd_run(config);
        } else {
            lle::cmd_sweep_eps(config, eps_ratios);
        }
    } catch (const lle::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
