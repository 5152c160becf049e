// Command-line front end: run presets or custom configs, sweep one
// parameter, list presets.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tqdfock/errors.hpp"
#include "tqdfock/scenario.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIntegration = 3;
constexpr int kExitIo = 4;

struct CommonOptions {
    std::string config_path;
    std::string preset;
    std::string out;
    std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "key=value config file");
    cmd->add_option("--preset", opts.preset, "named preset (see `presets`)");
    cmd->add_option("--out", opts.out, "output CSV path");
    cmd->add_option("--set", opts.sets, "override a config key (key=value), repeatable")
        ->take_all();
}

// preset < config file < --set < --out
tqdfock::SimulationConfig build_config(const CommonOptions& opts) {
    tqdfock::SimulationConfig config;
    if (!opts.preset.empty()) config = tqdfock::resolve_preset(opts.preset);
    if (!opts.config_path.empty()) config = tqdfock::load_config_file(opts.config_path, config);
    for (const auto& s : opts.sets) tqdfock::apply_assignment(config, s);
    if (!opts.out.empty()) config.output_path = opts.out;
    return config;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        tqdfock::SimulationConfig probe;
        tqdfock::apply_setting(probe, "omega0_T", item);  // reuse numeric validation
        values.push_back(probe.omega0_T);
    }
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-photon Fock-state production by STIRAP and transitionless driving"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "propagate one configuration, write CSV + summary");
    add_common(run_cmd, run_opts);

    CommonOptions sweep_opts;
    std::string sweep_param;
    std::string sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "run one summary row per parameter value");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--param", sweep_param, "numeric config key to vary")->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values")->required();

    auto* presets_cmd = app.add_subcommand("presets", "list preset names and parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (presets_cmd->parsed()) {
            for (const auto& name : tqdfock::preset_names()) {
                std::cout << "[" << name << "]\n"
                          << tqdfock::format_config(tqdfock::resolve_preset(name)) << '\n';
            }
            return 0;
        }
        if (run_cmd->parsed()) {
            const auto config = build_config(run_opts);
            const auto result = tqdfock::run(config);
            tqdfock::write_summary(std::cout, result.summary);
            std::cout << "output_path=" << config.output_path << '\n';
            return 0;
        }
        if (sweep_cmd->parsed()) {
            auto config = build_config(sweep_opts);
            const auto values = parse_values(sweep_values);
            const auto table = tqdfock::sweep(config, sweep_param, values);
            const std::string out = sweep_opts.out.empty() ? "sweep.csv" : sweep_opts.out;
            std::ofstream os(out, std::ios::binary);
            if (!os) throw tqdfock::IoError("cannot open output file '" + out + "'");
            tqdfock::write_sweep_csv(os, table);
            if (!os.flush()) throw tqdfock::IoError("failed writing '" + out + "'");
            std::cout << "rows=" << table.rows.size() << '\n' << "output_path=" << out << '\n';
            return 0;
        }
    } catch (const tqdfock::IntegrationError& e) {
        std::cerr << "integration failure: " << e.what() << '\n';
        return kExitIntegration;
    } catch (const tqdfock::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const tqdfock::DegeneracyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIntegration;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
