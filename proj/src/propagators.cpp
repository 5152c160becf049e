#include "tqdfock/propagators.hpp"

#include <cmath>
#include <sstream>

#include "tqdfock/errors.hpp"

namespace tqdfock {

namespace {

const std::complex<double> kMinusI(0.0, -1.0);

std::string drift_message(const char* what, double t, double value) {
    std::ostringstream os;
    os << what << " drifted to " << value << " at t=" << t << "; reduce dt";
    return os.str();
}

bool record_step(std::size_t step, std::size_t total, int stride) {
    return step % static_cast<std::size_t>(stride) == 0 || step == total;
}

}  // namespace

void TimeGrid::validate() const {
    if (!(t_start < t_end)) throw ParameterError("time grid requires t_start < t_end");
    if (!(dt > 0.0)) throw ParameterError("time step dt must be positive");
    if (stride < 1) throw ParameterError("sample stride must be at least 1");
    const double span = t_end - t_start;
    const double n = std::round(span / dt);
    if (n < 1.0 || std::abs(n * dt - span) > 1e-9 * span) {
        throw ParameterError("time window is not an integer number of dt steps");
    }
}

std::size_t TimeGrid::steps() const {
    return static_cast<std::size_t>(std::llround((t_end - t_start) / dt));
}

double TimeGrid::time_at(std::size_t step) const {
    return step == steps() ? t_end : t_start + static_cast<double>(step) * dt;
}

Trajectory propagate_schrodinger(const HamiltonianFn& hamiltonian, const ProductBasis& basis,
                                 const StateVector& psi0, const TimeGrid& grid) {
    grid.validate();
    if (psi0.amplitudes.size() != basis.dimension()) {
        throw ParameterError("initial state dimension does not match the basis");
    }
    if (std::abs(psi0.amplitudes.squaredNorm() - 1.0) > kConservationFailure) {
        throw ParameterError("initial state is not normalized");
    }

    Trajectory traj{basis, {}};
    const std::size_t total = grid.steps();
    traj.samples.reserve(total / static_cast<std::size_t>(grid.stride) + 2);

    Eigen::VectorXcd psi = psi0.amplitudes;
    traj.samples.push_back({grid.t_start, StateVector{psi, grid.t_start}});

    Eigen::VectorXcd k1, k2, k3, k4;
    for (std::size_t step = 0; step < total; ++step) {
        const double t = grid.time_at(step);
        const double h = grid.time_at(step + 1) - t;
        const Operator h0 = hamiltonian(t);
        const Operator hm = hamiltonian(t + 0.5 * h);
        const Operator h1 = hamiltonian(t + h);

        k1.noalias() = kMinusI * (h0 * psi);
        k2.noalias() = kMinusI * (hm * (psi + (0.5 * h) * k1));
        k3.noalias() = kMinusI * (hm * (psi + (0.5 * h) * k2));
        k4.noalias() = kMinusI * (h1 * (psi + h * k3));
        psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (record_step(step + 1, total, grid.stride)) {
            const double t_next = grid.time_at(step + 1);
            const double norm = psi.squaredNorm();
            if (!std::isfinite(norm) || std::abs(norm - 1.0) > kConservationFailure) {
                throw IntegrationError(drift_message("norm", t_next, norm));
            }
            traj.samples.push_back({t_next, StateVector{psi, t_next}});
        }
    }
    return traj;
}

Trajectory propagate_lindblad(const ModelConfig& config, const ProductBasis& basis,
                              const DensityMatrix& rho0, const TimeGrid& grid) {
    grid.validate();
    config.validate();
    if (!config.dissipation) {
        throw ParameterError("propagate_lindblad requires gamma/kappa to be configured");
    }
    if (config.model != ModelKind::effective || basis.model() != ModelKind::effective) {
        throw ModelMismatchError("the master equation is defined for the effective model only");
    }
    const int dim = basis.dimension();
    if (rho0.rho.rows() != dim || rho0.rho.cols() != dim) {
        throw ParameterError("initial density matrix dimension does not match the basis");
    }
    if (std::abs(rho0.rho.trace().real() - 1.0) > kConservationFailure) {
        throw ParameterError("initial density matrix does not have unit trace");
    }

    const double kappa = config.dissipation->kappa;
    const double gamma = config.dissipation->gamma;
    const Operator a = ladder_operators(basis).a;
    const Operator a_dag = a.adjoint();
    // Lowering S_j = |g_j⟩⟨e|.
    const Operator s1 = atomic_transition(basis, Level::g1, Level::e);
    const Operator s2 = atomic_transition(basis, Level::g2, Level::e);

    auto rhs = [&](const Operator& h, const Eigen::MatrixXcd& rho) -> Eigen::MatrixXcd {
        Eigen::MatrixXcd hr = h * rho;
        Eigen::MatrixXcd out = kMinusI * (hr - hr.adjoint());
        if (kappa != 0.0) out.noalias() += kappa * (a * rho * a_dag);
        if (gamma != 0.0) {
            out.noalias() += (0.5 * gamma) * (s1 * rho * s1.adjoint());
            out.noalias() += (0.5 * gamma) * (s2 * rho * s2.adjoint());
        }
        return out;
    };

    auto check = [&](const Eigen::MatrixXcd& rho, double t) {
        const double tr = rho.trace().real();
        if (!std::isfinite(tr) || std::abs(tr - 1.0) > kConservationFailure) {
            throw IntegrationError(drift_message("trace", t, tr));
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
        const double min_eig = es.eigenvalues()(0);
        if (min_eig < kNegativityFailure) {
            throw IntegrationError(drift_message("minimum eigenvalue of rho", t, min_eig));
        }
    };

    Trajectory traj{basis, {}};
    const std::size_t total = grid.steps();
    traj.samples.reserve(total / static_cast<std::size_t>(grid.stride) + 2);

    Eigen::MatrixXcd rho = rho0.rho;
    traj.samples.push_back({grid.t_start, DensityMatrix{rho, grid.t_start}});

    for (std::size_t step = 0; step < total; ++step) {
        const double t = grid.time_at(step);
        const double h = grid.time_at(step + 1) - t;
        const Operator h0 = dissipative_hamiltonian(config, basis, t);
        const Operator hm = dissipative_hamiltonian(config, basis, t + 0.5 * h);
        const Operator h1 = dissipative_hamiltonian(config, basis, t + h);

        const Eigen::MatrixXcd k1 = rhs(h0, rho);
        const Eigen::MatrixXcd k2 = rhs(hm, rho + (0.5 * h) * k1);
        const Eigen::MatrixXcd k3 = rhs(hm, rho + (0.5 * h) * k2);
        const Eigen::MatrixXcd k4 = rhs(h1, rho + h * k3);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = (0.5 * (rho + rho.adjoint())).eval();

        if (record_step(step + 1, total, grid.stride)) {
            const double t_next = grid.time_at(step + 1);
            check(rho, t_next);
            traj.samples.push_back({t_next, DensityMatrix{rho, t_next}});
        }
    }
    return traj;
}

double elimination_residual(const Trajectory& trajectory) {
    if (!trajectory.basis.has(Level::e_m)) {
        throw ModelMismatchError("elimination residual needs a full-model trajectory");
    }
    double worst = 0.0;
    for (const auto& s : trajectory.samples) {
        worst = std::max(worst, level_population(trajectory.basis, s.state, Level::e_m));
    }
    return worst;
}

}  // namespace tqdfock
