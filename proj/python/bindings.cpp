#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tqdfock/errors.hpp"
#include "tqdfock/scenario.hpp"

namespace py = pybind11;
using namespace tqdfock;

namespace {

py::dict summary_dict(const RunSummary& s) {
    py::dict d;
    d["scenario"] = s.scenario;
    d["model"] = to_string(s.model);
    d["drive"] = to_string(s.drive);
    d["final_t_over_T"] = s.final_t;
    d["final_p_g1_0"] = s.final_p_g1_0;
    d["final_p_e_0"] = s.final_p_e_0;
    d["final_p_g2_1"] = s.final_p_g2_1;
    d["final_p_g2_0"] = s.final_p_g2_0;
    d["final_p_em_0"] = s.final_p_em_0;
    d["max_p_e_0"] = s.max_p_e_0;
    d["max_p_em"] = s.max_p_em;
    d["final_n_mean"] = s.final_n_mean;
    d["final_mandel_q"] = s.final_mandel_q;
    d["final_dark_overlap"] = s.final_dark_overlap;
    d["norm_drift"] = s.norm_drift;
    d["wall_time_s"] = s.wall_time_s;
    return d;
}

SimulationConfig make_config(const std::string& preset, const py::dict& overrides) {
    SimulationConfig c = preset.empty() ? SimulationConfig{} : resolve_preset(preset);
    for (const auto& [k, v] : overrides) {
        const std::string value = v.is_none() ? std::string() : py::str(v).cast<std::string>();
        apply_setting(c, py::str(k).cast<std::string>(), value);
    }
    return c;
}

PulseParameters make_pulses(double omega0, double tau_p, double tau_s, double delta,
                            double delta_m) {
    PulseParameters p;
    p.omega0 = omega0;
    p.tau_p = tau_p;
    p.tau_s = tau_s;
    p.delta = delta;
    p.delta_m = delta_m;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "STIRAP / transitionless-driving single-photon source simulator";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ModelMismatchError>(m, "ModelMismatchError", PyExc_ValueError);
    py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_ArithmeticError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def("gaussian_pulse", &gaussian_pulse, py::arg("omega0"), py::arg("center"),
          py::arg("width"), py::arg("t"));

    m.def(
        "stirap_pair",
        [](double t, double omega0, double tau_p, double tau_s) {
            const auto p = stirap_pair(make_pulses(omega0, tau_p, tau_s, 1.0, 18.0), t);
            return py::make_tuple(p.omega_r, p.g);
        },
        py::arg("t"), py::arg("omega0") = 2.0, py::arg("tau_p") = 0.5, py::arg("tau_s") = 0.5);

    m.def(
        "counterdiabatic_amplitude",
        [](double t, double omega0, double tau_p, double tau_s) {
            return counterdiabatic_amplitude(make_pulses(omega0, tau_p, tau_s, 1.0, 18.0), t);
        },
        py::arg("t"), py::arg("omega0") = 2.0, py::arg("tau_p") = 0.5, py::arg("tau_s") = 0.5);

    m.def(
        "physical_pulse_pair",
        [](double t, double delta_m, double tau_p, double tau_s) {
            const auto p = physical_pulse_pair(make_pulses(2.0, tau_p, tau_s, 1.0, delta_m), t);
            return py::make_tuple(p.g_m, p.omega_m);
        },
        py::arg("t"), py::arg("delta_m") = 18.0, py::arg("tau_p") = 0.5, py::arg("tau_s") = 0.5);

    m.def("effective_raman_coupling", &effective_raman_coupling, py::arg("omega_m"),
          py::arg("g_m"), py::arg("delta_m"));

    m.def(
        "analytic_eigensystem",
        [](double omega_r, double g, double delta) {
            const auto es = analytic_eigensystem(omega_r, g, delta);
            py::dict d;
            d["theta"] = es.theta;
            d["phi"] = es.phi;
            d["eigenvalues"] = es.eigenvalues;
            py::list vecs;
            for (const auto& v : es.eigenvectors) vecs.append(Eigen::VectorXcd(v));
            d["eigenvectors"] = vecs;
            return d;
        },
        py::arg("omega_r"), py::arg("g"), py::arg("delta"));

    m.def("presets", &preset_names);

    m.def(
        "run",
        [](const std::string& preset, const py::dict& overrides, bool write_csv) {
            const SimulationConfig c = make_config(preset, overrides);
            const SimulationResult r = [&] {
                py::gil_scoped_release release;
                return write_csv ? run(c) : simulate(c);
            }();
            std::ostringstream csv;
            write_trajectory_csv(csv, c.model, r.rows);
            py::dict out;
            out["summary"] = summary_dict(r.summary);
            out["csv"] = csv.str();
            return out;
        },
        py::arg("preset") = "", py::arg("overrides") = py::dict(), py::arg("write_csv") = false,
        "Propagate a preset (optionally overridden with key=value settings). Returns the run "
        "summary and the trajectory CSV text.");

    m.def(
        "sweep",
        [](const std::string& preset, const std::string& parameter,
           const std::vector<double>& values, const py::dict& overrides) {
            const SimulationConfig c = make_config(preset, overrides);
            SweepTable table;
            {
                py::gil_scoped_release release;
                table = sweep(c, parameter, values);
            }
            py::list rows;
            for (const auto& s : table.rows) rows.append(summary_dict(s));
            return rows;
        },
        py::arg("preset"), py::arg("parameter"), py::arg("values"),
        py::arg("overrides") = py::dict());
}
