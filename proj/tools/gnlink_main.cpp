#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gnlink/config.hpp"
#include "gnlink/error.hpp"
#include "gnlink/runner.hpp"

// Exit codes: 0 success, 2 config error, 3 numerical failure,
// 4 validation-suite failure.

namespace {

gnlink::SimulationConfig load(const std::string& path, const std::string& out_override,
                              bool has_seed, std::uint64_t seed) {
    gnlink::SimulationConfig config = gnlink::load_config(path);
    if (!out_override.empty()) config.output_directory = out_override;
    if (has_seed) config.override_seeds(seed);
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gnlink - ultra-wideband WDM link throughput estimator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool has_seed = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "simulation config file")->required();
        cmd->add_option("--out", out_dir, "output directory override");
        cmd->add_option("--seed", seed, "override every seeded stage")
            ->each([&](const std::string&) { has_seed = true; });
    };

    CLI::App* simulate = app.add_subcommand("simulate", "evaluate the link at the config powers");
    CLI::App* optimize = app.add_subcommand("optimize", "optimize launch powers, then simulate");
    CLI::App* sweep = app.add_subcommand("rate-sweep", "throughput vs number of code rates");
    CLI::App* validate = app.add_subcommand("validate", "run the validation property suites");
    add_common(simulate);
    add_common(optimize);
    add_common(sweep);
    add_common(validate);

    CLI11_PARSE(app, argc, argv);

    try {
        gnlink::SimulationConfig config = load(config_path, out_dir, has_seed, seed);
        if (simulate->parsed()) {
            gnlink::SimReport report = gnlink::run_simulate(config);
            std::cout << "scenario " << report.scenario << ": total "
                      << report.total_throughput_bps / 1e12 << " Tb/s (GMI bound "
                      << report.gmi_bound_bps / 1e12 << " Tb/s) with " << config.k_rates
                      << " code rates\n";
        } else if (optimize->parsed()) {
            gnlink::OptimizeReport report = gnlink::run_optimize(config);
            std::cout << "pso " << report.pso_objective_bps / 1e12 << " Tb/s, refined "
                      << report.refined_objective_bps / 1e12 << " Tb/s, quantized "
                      << report.simulation.total_throughput_bps / 1e12 << " Tb/s\n";
        } else if (sweep->parsed()) {
            gnlink::RateSweepReport report = gnlink::run_rate_sweep(config, config.sweep);
            for (const auto& row : report.rows)
                std::cout << "K=" << row.k << ": " << row.throughput_bps / 1e12 << " Tb/s\n";
            std::cout << "bound: " << report.gmi_bound_bps / 1e12 << " Tb/s\n";
        } else if (validate->parsed()) {
            gnlink::ValidationReport report = gnlink::run_validate(config);
            for (const auto& check : report.checks)
                std::cout << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": "
                          << check.detail << "\n";
            if (!report.all_passed()) return 4;
        }
    } catch (const gnlink::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const gnlink::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const gnlink::ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
