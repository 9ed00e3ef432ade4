#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiment_config.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"murmuration curves for quadratic characters and elliptic curves"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";

    const std::vector<std::string> experiments = {"char-murmuration", "cech",
                                                  "ec-murmuration", "ec-window",
                                                  "density-table", "validate"};
    std::vector<CLI::App*> subs;
    for (const auto& name : experiments) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "flat key=value configuration file");
        sub->add_option("--set", overrides, "override a config key (key=value)")
            ->take_all();
        sub->add_option("--out", out_dir, "output directory");
        subs.push_back(sub);
    }

    CLI11_PARSE(app, argc, argv);

    const std::string experiment = app.get_subcommands().front()->get_name();
    murmur::cli::Config config;
    try {
        config = murmur::cli::Config::from_file(config_path);
        for (const auto& kv : overrides) config.apply_override(kv);
    } catch (const std::exception& e) {
        fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }
    return murmur::cli::run_experiment(experiment, std::move(config), out_dir);
}
