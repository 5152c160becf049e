#include "tqdfock/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "tqdfock/errors.hpp"

namespace tqdfock {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw UsageError("invalid numeric value '" + std::string(text) + "' for " +
                         std::string(key));
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        // Accept integral floating-point spellings such as "3.0" in sweeps.
        const double d = parse_double(key, text);
        if (d != std::round(d) || std::abs(d) > 1e9) {
            throw UsageError("invalid integer value '" + std::string(text) + "' for " +
                             std::string(key));
        }
        return static_cast<int>(d);
    }
    return value;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

SimulationConfig fig2(const char* name, DriveKind drive, double omega0) {
    SimulationConfig c;
    c.scenario = name;
    c.model = ModelKind::effective;
    c.drive = drive;
    c.omega0_T = omega0;
    c.delta_T = 1.0;
    c.tau_p_over_T = 0.5;
    c.tau_s_over_T = 0.5;
    return c;
}

SimulationConfig make_preset(std::string_view name) {
    if (name == "fig2_stirap") return fig2("fig2_stirap", DriveKind::stirap, 2.0);
    if (name == "fig2_tqd") return fig2("fig2_tqd", DriveKind::tqd, 2.0);
    if (name == "fig2e_lossless") return fig2("fig2e_lossless", DriveKind::tqd, 5.0);
    if (name == "fig2f_dissipative_stirap" || name == "fig2f_dissipative_tqd") {
        const bool tqd = name == "fig2f_dissipative_tqd";
        auto c = fig2(tqd ? "fig2f_dissipative_tqd" : "fig2f_dissipative_stirap",
                      tqd ? DriveKind::tqd : DriveKind::stirap, 5.0);
        c.gamma_T = 5.0;
        c.kappa_T = 0.05;
        return c;
    }
    if (name == "fig3_full") {
        auto c = fig2("fig3_full", DriveKind::tqd, 2.0);
        c.model = ModelKind::full;
        c.delta_m_T = 18.0;
        return c;
    }
    throw UsageError("unknown preset '" + std::string(name) + "'; known presets: " +
                     join(preset_names()));
}

bool is_preset(std::string_view name) {
    const auto& names = preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

RunSummary summarize(const SimulationConfig& config, const Trajectory& traj,
                     const std::vector<TrajectoryRow>& rows) {
    RunSummary s;
    s.scenario = config.scenario;
    s.model = config.model;
    s.drive = config.drive;
    const auto& basis = traj.basis;
    const bool full = basis.has(Level::e_m);
    if (full) s.max_p_em = 0.0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& obs = rows[k].observables;
        s.max_p_e_0 = std::max(s.max_p_e_0, obs.populations.at({Level::e, 0}));
        if (full) {
            s.max_p_em = std::max(*s.max_p_em,
                                  level_population(basis, traj.samples[k].state, Level::e_m));
        }
        s.norm_drift = std::max(s.norm_drift, std::abs(obs.norm_or_trace - 1.0));
    }
    const auto& last = rows.back().observables;
    s.final_t = last.t;
    s.final_p_g1_0 = last.populations.at({Level::g1, 0});
    s.final_p_e_0 = last.populations.at({Level::e, 0});
    s.final_p_g2_1 = last.populations.at({Level::g2, 1});
    s.final_p_g2_0 = last.populations.at({Level::g2, 0});
    if (full) s.final_p_em_0 = last.populations.at({Level::e_m, 0});
    s.final_n_mean = last.mean_photon_n;
    s.final_mandel_q = last.mandel_q;
    s.final_dark_overlap = last.dark_overlap;
    return s;
}

}  // namespace

ModelConfig SimulationConfig::model_config() const {
    ModelConfig mc;
    mc.model = model;
    mc.drive = drive;
    mc.pulses.omega0 = omega0_T;
    mc.pulses.T = 1.0;
    mc.pulses.tau_p = tau_p_over_T;
    mc.pulses.tau_s = tau_s_over_T;
    mc.pulses.delta = delta_T;
    mc.pulses.delta_m = delta_m_T;
    if (dissipative()) mc.dissipation = Dissipation{gamma_T.value_or(0.0), kappa_T.value_or(0.0)};
    return mc;
}

TimeGrid SimulationConfig::grid() const {
    return {t_start_over_T, t_end_over_T, dt_over_T, stride};
}

void SimulationConfig::validate() const {
    model_config().validate();
    grid().validate();
    if (n_max < 1) throw ParameterError("n_max must be at least 1");
    if (dissipative() && model == ModelKind::full) {
        throw ModelMismatchError("dissipation is only supported on the effective model");
    }
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fig2_stirap",   "fig2_tqd", "fig2e_lossless", "fig2f_dissipative_stirap",
        "fig2f_dissipative_tqd", "fig3_full"};
    return names;
}

SimulationConfig resolve_preset(std::string_view name) { return make_preset(name); }

const std::vector<std::string>& numeric_keys() {
    static const std::vector<std::string> keys = {
        "omega0_T",       "delta_T",      "delta_m_T",  "tau_p_over_T", "tau_s_over_T",
        "gamma_T",        "kappa_T",      "t_start_over_T", "t_end_over_T", "dt_over_T",
        "n_max",          "stride"};
    return keys;
}

void apply_setting(SimulationConfig& c, std::string_view key_in, std::string_view value_in) {
    const auto key = trim(key_in);
    const auto value = trim(value_in);
    if (key == "scenario") {
        c.scenario = std::string(value);
    } else if (key == "model") {
        if (value == "effective") c.model = ModelKind::effective;
        else if (value == "full") c.model = ModelKind::full;
        else throw UsageError("model must be 'effective' or 'full', got '" + std::string(value) + "'");
    } else if (key == "drive") {
        if (value == "stirap") c.drive = DriveKind::stirap;
        else if (value == "tqd") c.drive = DriveKind::tqd;
        else throw UsageError("drive must be 'stirap' or 'tqd', got '" + std::string(value) + "'");
    } else if (key == "omega0_T") {
        c.omega0_T = parse_double(key, value);
    } else if (key == "delta_T") {
        c.delta_T = parse_double(key, value);
    } else if (key == "delta_m_T") {
        c.delta_m_T = parse_double(key, value);
    } else if (key == "tau_p_over_T") {
        c.tau_p_over_T = parse_double(key, value);
    } else if (key == "tau_s_over_T") {
        c.tau_s_over_T = parse_double(key, value);
    } else if (key == "gamma_T") {
        c.gamma_T = value.empty() ? std::nullopt : std::optional(parse_double(key, value));
    } else if (key == "kappa_T") {
        c.kappa_T = value.empty() ? std::nullopt : std::optional(parse_double(key, value));
    } else if (key == "t_start_over_T") {
        c.t_start_over_T = parse_double(key, value);
    } else if (key == "t_end_over_T") {
        c.t_end_over_T = parse_double(key, value);
    } else if (key == "dt_over_T") {
        c.dt_over_T = parse_double(key, value);
    } else if (key == "n_max") {
        c.n_max = parse_int(key, value);
    } else if (key == "stride") {
        c.stride = parse_int(key, value);
    } else if (key == "output_path") {
        c.output_path = std::string(value);
    } else {
        throw UsageError("unknown config key '" + std::string(key) + "'");
    }
}

void apply_assignment(SimulationConfig& config, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw UsageError("expected key=value, got '" + std::string(assignment) + "'");
    }
    apply_setting(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

SimulationConfig parse_config(std::string_view text, SimulationConfig base) {
    SimulationConfig c = std::move(base);
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "scenario" && is_preset(value)) {
            c = resolve_preset(value);
            continue;
        }
        try {
            apply_setting(c, key, value);
        } catch (const UsageError& e) {
            throw UsageError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return c;
}

SimulationConfig load_config_file(const std::string& path, SimulationConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

std::string format_config(const SimulationConfig& c) {
    std::ostringstream os;
    os.precision(17);
    auto opt = [](std::optional<double> v) {
        std::ostringstream s;
        s.precision(17);
        if (v) s << *v;
        return s.str();
    };
    os << "scenario=" << c.scenario << '\n'
       << "model=" << to_string(c.model) << '\n'
       << "drive=" << to_string(c.drive) << '\n'
       << "omega0_T=" << c.omega0_T << '\n'
       << "delta_T=" << c.delta_T << '\n'
       << "delta_m_T=" << c.delta_m_T << '\n'
       << "tau_p_over_T=" << c.tau_p_over_T << '\n'
       << "tau_s_over_T=" << c.tau_s_over_T << '\n'
       << "gamma_T=" << opt(c.gamma_T) << '\n'
       << "kappa_T=" << opt(c.kappa_T) << '\n'
       << "t_start_over_T=" << c.t_start_over_T << '\n'
       << "t_end_over_T=" << c.t_end_over_T << '\n'
       << "dt_over_T=" << c.dt_over_T << '\n'
       << "n_max=" << c.n_max << '\n'
       << "stride=" << c.stride << '\n';
    return os.str();
}

SimulationResult simulate(const SimulationConfig& config) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    const ModelConfig mc = config.model_config();
    const ProductBasis basis(config.model, config.n_max);
    const TimeGrid grid = config.grid();
    const StateVector psi0 = basis_state(basis, Level::g1, 0, grid.t_start);

    Trajectory traj = [&] {
        if (config.dissipative()) {
            return propagate_lindblad(mc, basis, pure_density(psi0), grid);
        }
        HamiltonianFn h = [mc, basis](double t) { return model_hamiltonian(mc, basis, t); };
        return propagate_schrodinger(h, basis, psi0, grid);
    }();

    const ControlSchedule schedule = mc.schedule();
    std::vector<TrajectoryRow> rows;
    rows.reserve(traj.samples.size());
    for (const auto& sample : traj.samples) {
        TrajectoryRow row;
        row.controls = schedule.at(sample.t);
        std::optional<EigenSystem> es;
        if (config.model == ModelKind::effective &&
            std::hypot(row.controls.omega_r, row.controls.g) > 0.0) {
            es = analytic_eigensystem(row.controls.omega_r, row.controls.g, mc.pulses.delta);
        }
        row.observables = measure(basis, sample.state, sample.t, es);
        rows.push_back(std::move(row));
    }

    RunSummary summary = summarize(config, traj, rows);
    summary.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return {config, std::move(traj), std::move(rows), std::move(summary)};
}

SimulationResult run(const SimulationConfig& config) {
    SimulationResult result = simulate(config);
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + config.output_path + "'");
    write_trajectory_csv(out, config.model, result.rows);
    out.flush();
    if (!out) throw IoError("failed writing output file '" + config.output_path + "'");
    return result;
}

const char* const kTrajectoryCsvHeader =
    "t_over_T,p_g1_0,p_e_0,p_g2_1,p_g2_0,p_em_0,dark_overlap,n_mean,mandel_q,norm_or_trace,"
    "omega_r_T,g_T,omega1_T,gm_T,omegam_T";

std::string format_number(std::optional<double> value) {
    if (!value) return {};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", *value);
    return buf;
}

void write_trajectory_csv(std::ostream& os, ModelKind model,
                          const std::vector<TrajectoryRow>& rows) {
    const bool full = model == ModelKind::full;
    os << kTrajectoryCsvHeader << '\n';
    for (const auto& row : rows) {
        const auto& o = row.observables;
        const auto& c = row.controls;
        const auto pop = [&](Level l, int n) -> std::optional<double> {
            const auto it = o.populations.find({l, n});
            if (it == o.populations.end()) return std::nullopt;
            return it->second;
        };
        os << format_number(o.t) << ',' << format_number(pop(Level::g1, 0)) << ','
           << format_number(pop(Level::e, 0)) << ',' << format_number(pop(Level::g2, 1)) << ','
           << format_number(pop(Level::g2, 0)) << ',' << format_number(pop(Level::e_m, 0)) << ','
           << format_number(o.dark_overlap) << ',' << format_number(o.mean_photon_n) << ','
           << format_number(o.mandel_q) << ',' << format_number(o.norm_or_trace) << ','
           << format_number(c.omega_r) << ',' << format_number(c.g) << ','
           << format_number(full ? std::nullopt : std::optional(c.omega1)) << ','
           << format_number(full ? std::optional(c.g_m) : std::nullopt) << ','
           << format_number(full ? std::optional(c.omega_m) : std::nullopt) << '\n';
    }
}

void write_summary(std::ostream& os, const RunSummary& s) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_number(v) : std::string("undefined");
    };
    os << "scenario=" << s.scenario << '\n'
       << "model=" << to_string(s.model) << '\n'
       << "drive=" << to_string(s.drive) << '\n'
       << "final_t_over_T=" << format_number(s.final_t) << '\n'
       << "final_p_g1_0=" << format_number(s.final_p_g1_0) << '\n'
       << "final_p_e_0=" << format_number(s.final_p_e_0) << '\n'
       << "final_p_g2_1=" << format_number(s.final_p_g2_1) << '\n'
       << "final_p_g2_0=" << format_number(s.final_p_g2_0) << '\n';
    if (s.final_p_em_0) os << "final_p_em_0=" << format_number(s.final_p_em_0) << '\n';
    os << "max_p_e_0=" << format_number(s.max_p_e_0) << '\n';
    if (s.max_p_em) os << "max_p_em=" << format_number(s.max_p_em) << '\n';
    os << "final_n_mean=" << format_number(s.final_n_mean) << '\n'
       << "final_mandel_q=" << opt(s.final_mandel_q) << '\n'
       << "final_dark_overlap=" << opt(s.final_dark_overlap) << '\n'
       << "norm_drift=" << format_number(s.norm_drift) << '\n'
       << "wall_time_s=" << format_number(s.wall_time_s) << '\n';
}

SweepTable sweep(const SimulationConfig& base, std::string_view parameter,
                 const std::vector<double>& values) {
    const auto& keys = numeric_keys();
    if (std::find(keys.begin(), keys.end(), parameter) == keys.end()) {
        throw UsageError("'" + std::string(parameter) +
                         "' is not a numeric parameter; choose one of: " + join(keys));
    }
    SweepTable table{std::string(parameter), values, {}};
    std::vector<SimulationConfig> configs;
    configs.reserve(values.size());
    for (double v : values) {
        SimulationConfig c = base;
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        apply_setting(c, parameter, buf);
        c.validate();
        configs.push_back(std::move(c));
    }

    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    table.rows.resize(configs.size());
    for (std::size_t begin = 0; begin < configs.size(); begin += workers) {
        const std::size_t end = std::min(configs.size(), begin + workers);
        std::vector<std::future<RunSummary>> pending;
        for (std::size_t k = begin; k < end; ++k) {
            pending.push_back(std::async(std::launch::async,
                                         [&cfg = configs[k]] { return simulate(cfg).summary; }));
        }
        for (std::size_t k = begin; k < end; ++k) table.rows[k] = pending[k - begin].get();
    }
    return table;
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
    os << table.parameter
       << ",final_p_g1_0,final_p_e_0,final_p_g2_1,final_p_g2_0,final_p_em_0,max_p_e_0,max_p_em,"
          "final_n_mean,final_mandel_q,final_dark_overlap,norm_drift\n";
    for (std::size_t k = 0; k < table.rows.size(); ++k) {
        const auto& s = table.rows[k];
        os << format_number(table.values[k]) << ',' << format_number(s.final_p_g1_0) << ','
           << format_number(s.final_p_e_0) << ',' << format_number(s.final_p_g2_1) << ','
           << format_number(s.final_p_g2_0) << ',' << format_number(s.final_p_em_0) << ','
           << format_number(s.max_p_e_0) << ',' << format_number(s.max_p_em) << ','
           << format_number(s.final_n_mean) << ',' << format_number(s.final_mandel_q) << ','
           << format_number(s.final_dark_overlap) << ',' << format_number(s.norm_drift) << '\n';
    }
}

}  // namespace tqdfock
