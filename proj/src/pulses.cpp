#include "tqdfock/pulses.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "tqdfock/errors.hpp"

namespace tqdfock {

namespace {

constexpr double kTailClamp = 1e-30;

double log_sum_exp(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

void PulseParameters::validate() const {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw ParameterError("characteristic time T must be positive, got " + std::to_string(T));
    }
    if (!(omega0 >= 0.0) || !std::isfinite(omega0)) {
        throw ParameterError("pulse amplitude omega0 must be non-negative, got " +
                             std::to_string(omega0));
    }
    if (!std::isfinite(tau_p) || !std::isfinite(tau_s) || !std::isfinite(delta)) {
        throw ParameterError("pulse offsets and detuning must be finite");
    }
}

ControlSchedule::ControlSchedule(const PulseParameters& params, ScheduleKind kind)
    : params_(params), kind_(kind) {
    params_.validate();
    if (kind_ == ScheduleKind::tqd_full && !(params_.delta_m > 0.0)) {
        throw ParameterError("auxiliary pulses require delta_m > 0");
    }
}

ControlValues ControlSchedule::at(double t) const {
    ControlValues v;
    const auto pair = stirap_pair(params_, t);
    v.omega_r = pair.omega_r;
    v.g = pair.g;
    switch (kind_) {
        case ScheduleKind::stirap:
            break;
        case ScheduleKind::tqd_effective:
            v.omega1 = counterdiabatic_amplitude(params_, t);
            break;
        case ScheduleKind::tqd_full: {
            const auto aux = physical_pulse_pair(params_, t);
            v.g_m = aux.g_m;
            v.omega_m = aux.omega_m;
            break;
        }
    }
    return v;
}

double gaussian_pulse(double omega0, double center, double width, double t) {
    if (!(width > 0.0)) {
        throw ParameterError("Gaussian width must be positive, got " + std::to_string(width));
    }
    const double x = (t - center) / width;
    return omega0 * std::exp(-x * x);
}

StirapPair stirap_pair(const PulseParameters& params, double t) {
    return {gaussian_pulse(params.omega0, params.tau_p, params.T, t),
            gaussian_pulse(params.omega0, -params.tau_s, params.T, t)};
}

double counterdiabatic_amplitude(const PulseParameters& params, double t) {
    if (params.omega0 == 0.0) return 0.0;
    const auto pair = stirap_pair(params, t);
    const double floor = kTailClamp * params.omega0;
    if (pair.omega_r < floor && pair.g < floor) return 0.0;

    // gΩ_R/(g²+Ω_R²) = 1/(2 cosh r) with r = ln(Ω_R/g), evaluated from the
    // Gaussian exponents directly.
    const double T2 = params.T * params.T;
    const double xp = t - params.tau_p;
    const double xs = t + params.tau_s;
    const double log_ratio = (xs * xs - xp * xp) / T2;
    return (params.tau_p + params.tau_s) / T2 / std::cosh(log_ratio);
}

AuxiliaryPair physical_pulse_pair(const PulseParameters& params, double t) {
    if (!(params.delta_m > 0.0)) {
        throw ParameterError("auxiliary pulses require delta_m > 0, got " +
                             std::to_string(params.delta_m));
    }
    params.validate();
    const double T2 = params.T * params.T;
    const double xs = t + params.tau_s;
    const double xp = t - params.tau_p;
    const double log_alpha = 0.5 * std::log(2.0 * params.delta_m / params.T);
    const double log_beta = 0.5 * log_sum_exp(-2.0 * xs * xs / T2, -2.0 * xp * xp / T2);
    const double value =
        std::exp(log_alpha - (t * t + params.tau_s * params.tau_s) / T2 - log_beta);
    return {value, value};
}

Eigen::MatrixXcd generic_counterdiabatic(const HermitianSchedule& hamiltonian, double t, double dt,
                                         double degeneracy_threshold) {
    if (!(dt > 0.0)) {
        throw ParameterError("finite-difference step must be positive");
    }
    using Real = long double;
    using CMat = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
    using Solver = Eigen::SelfAdjointEigenSolver<CMat>;

    const Eigen::MatrixXcd h_mid = hamiltonian(t);
    const auto n = h_mid.rows();
    if (h_mid.cols() != n) {
        throw ParameterError("Hamiltonian must be square");
    }
    if (n == 0) return h_mid;

    Solver mid(h_mid.cast<std::complex<Real>>());
    const auto& evals = mid.eigenvalues();
    const Real scale = std::max(std::abs(evals(0)), std::abs(evals(n - 1)));
    if (scale == 0) return Eigen::MatrixXcd::Zero(n, n);
    Real min_gap = std::numeric_limits<Real>::infinity();
    for (Eigen::Index k = 1; k < n; ++k) min_gap = std::min(min_gap, evals(k) - evals(k - 1));
    const Real threshold = static_cast<Real>(degeneracy_threshold) * scale;
    if (n > 1 && min_gap < threshold) {
        throw DegeneracyError("eigenvalue gap " + std::to_string(static_cast<double>(min_gap)) +
                                  " at t=" + std::to_string(t) + " is below degeneracy threshold " +
                                  std::to_string(static_cast<double>(threshold)),
                              static_cast<double>(min_gap), static_cast<double>(threshold));
    }
    const CMat& vecs = mid.eigenvectors();

    auto aligned = [&](double at) {
        Solver s(hamiltonian(at).cast<std::complex<Real>>());
        CMat v = s.eigenvectors();
        for (Eigen::Index k = 0; k < n; ++k) {
            const std::complex<Real> overlap = vecs.col(k).dot(v.col(k));
            const Real mag = std::abs(overlap);
            if (mag > 0) v.col(k) *= std::conj(overlap) / mag;
        }
        return v;
    };
    const CMat plus = aligned(t + 0.5 * dt);
    const CMat minus = aligned(t - 0.5 * dt);
    const CMat dvecs = (plus - minus) / static_cast<Real>(dt);

    const std::complex<Real> i_unit(0, 1);
    CMat h1 = i_unit * dvecs * vecs.adjoint();

    // Remove ⟨λ_n|H₁|λ_n⟩ components.
    CMat in_eigenbasis = vecs.adjoint() * h1 * vecs;
    in_eigenbasis.diagonal().setZero();
    h1 = vecs * in_eigenbasis * vecs.adjoint();
    h1 = (0.5L * (h1 + h1.adjoint())).eval();
    return h1.cast<std::complex<double>>();
}

}  // namespace tqdfock
