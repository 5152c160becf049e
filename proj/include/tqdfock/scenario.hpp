#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqdfock/propagators.hpp"

namespace tqdfock {

/// Flat run configuration. Key names double as config-file keys and
/// `--set` flag names.
struct SimulationConfig {
    std::string scenario = "custom";
    ModelKind model = ModelKind::effective;
    DriveKind drive = DriveKind::stirap;
    double omega0_T = 2.0;
    double delta_T = 1.0;
    double delta_m_T = 18.0;
    double tau_p_over_T = 0.5;
    double tau_s_over_T = 0.5;
    std::optional<double> gamma_T;
    std::optional<double> kappa_T;
    double t_start_over_T = -4.0;
    double t_end_over_T = 4.0;
    double dt_over_T = 1e-3;
    int n_max = 1;
    std::string output_path = "trajectory.csv";
    int stride = 10;

    bool dissipative() const { return gamma_T.has_value() || kappa_T.has_value(); }
    ModelConfig model_config() const;
    TimeGrid grid() const;
    void validate() const;
};

const std::vector<std::string>& preset_names();
/// Throws UsageError listing the known presets.
SimulationConfig resolve_preset(std::string_view name);

/// Numeric keys accepted by sweep.
const std::vector<std::string>& numeric_keys();

/// Throws UsageError on an unknown key or malformed value. An empty value
/// clears gamma_T / kappa_T.
void apply_setting(SimulationConfig& config, std::string_view key, std::string_view value);
/// "key=value" form.
void apply_assignment(SimulationConfig& config, std::string_view assignment);

/// key=value lines, '#' starts a comment. A `scenario` naming a preset
/// resets the config to that preset before the remaining keys apply.
SimulationConfig parse_config(std::string_view text, SimulationConfig base = {});
SimulationConfig load_config_file(const std::string& path, SimulationConfig base = {});
std::string format_config(const SimulationConfig& config);

/// One CSV row: observables and control values at a recorded time.
struct TrajectoryRow {
    ObservablesRecord observables;
    ControlValues controls;
};

struct RunSummary {
    std::string scenario;
    ModelKind model = ModelKind::effective;
    DriveKind drive = DriveKind::stirap;
    double final_t = 0.0;
    double final_p_g1_0 = 0.0;
    double final_p_e_0 = 0.0;
    double final_p_g2_1 = 0.0;
    double final_p_g2_0 = 0.0;
    std::optional<double> final_p_em_0;
    double max_p_e_0 = 0.0;
    std::optional<double> max_p_em;
    double final_n_mean = 0.0;
    std::optional<double> final_mandel_q;
    std::optional<double> final_dark_overlap;
    double norm_drift = 0.0;
    double wall_time_s = 0.0;
};

struct SimulationResult {
    SimulationConfig config;
    Trajectory trajectory;
    std::vector<TrajectoryRow> rows;
    RunSummary summary;
};

/// Propagates without touching the filesystem.
SimulationResult simulate(const SimulationConfig& config);
/// simulate() plus the trajectory CSV at config.output_path (IoError if unwritable).
SimulationResult run(const SimulationConfig& config);

extern const char* const kTrajectoryCsvHeader;

/// %.16e, or empty for a missing value.
std::string format_number(std::optional<double> value);
void write_trajectory_csv(std::ostream& os, ModelKind model, const std::vector<TrajectoryRow>& rows);
void write_summary(std::ostream& os, const RunSummary& summary);

struct SweepTable {
    std::string parameter;
    std::vector<double> values;
    std::vector<RunSummary> rows;
};

/// Independent runs, evaluated concurrently, kept in input order.
SweepTable sweep(const SimulationConfig& base, std::string_view parameter,
                 const std::vector<double>& values);
void write_sweep_csv(std::ostream& os, const SweepTable& table);

}  // namespace tqdfock
