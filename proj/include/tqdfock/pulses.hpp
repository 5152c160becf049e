#pragma once

#include <functional>

#include <Eigen/Dense>

namespace tqdfock {

/// Gaussian STIRAP pair plus auxiliary-drive parameters. Times in units of T,
/// rates in units of 1/T; internally T = 1 unless explicitly changed.
struct PulseParameters {
    double omega0 = 2.0;
    double T = 1.0;
    double tau_p = 0.5;
    double tau_s = 0.5;
    double delta = 1.0;
    double delta_m = 18.0;

    /// Throws ParameterError on T <= 0 or omega0 < 0.
    void validate() const;
};

struct ControlValues {
    double omega_r = 0.0;
    double g = 0.0;
    double omega1 = 0.0;
    double g_m = 0.0;
    double omega_m = 0.0;
};

enum class ScheduleKind {
    stirap,         // Ω_R and g only
    tqd_effective,  // adds the closed-form Ω₁ channel
    tqd_full,       // adds the g_m = Ω_m auxiliary pair
};

/// Control values of one drive configuration, evaluable at any time.
class ControlSchedule {
public:
    ControlSchedule(const PulseParameters& params, ScheduleKind kind);

    ControlValues at(double t) const;

    const PulseParameters& params() const noexcept { return params_; }
    ScheduleKind kind() const noexcept { return kind_; }
    bool stirap_only() const noexcept { return kind_ == ScheduleKind::stirap; }
    bool counterdiabatic_active() const noexcept { return kind_ == ScheduleKind::tqd_effective; }
    bool auxiliary_active() const noexcept { return kind_ == ScheduleKind::tqd_full; }

private:
    PulseParameters params_;
    ScheduleKind kind_;
};

double gaussian_pulse(double omega0, double center, double width, double t);

struct StirapPair {
    double omega_r;
    double g;
};

/// Pump Ω_R centred at +τ_p, cavity coupling g centred at −τ_s.
StirapPair stirap_pair(const PulseParameters& params, double t);

/// Closed-form counterdiabatic amplitude Ω₁ = (gΩ̇_R − ġΩ_R)/Ω² for the
/// Gaussian pair. Evaluated as (τ_p+τ_s)/T² / cosh(ln(Ω_R/g)) so the tails
/// never form 0/0; returns 0 once both pulses are below 1e-30·Ω₀.
double counterdiabatic_amplitude(const PulseParameters& params, double t);

struct AuxiliaryPair {
    double g_m;
    double omega_m;
};

/// Equal-shape auxiliary pair g_m = Ω_m = α exp[−(t²+τ_s²)/T²]/β with
/// α² = 2Δ_m/T. Computed in log space so both stay finite far in the tails.
AuxiliaryPair physical_pulse_pair(const PulseParameters& params, double t);

using HermitianSchedule = std::function<Eigen::MatrixXcd(double)>;

/// Default relative eigenvalue-gap threshold for generic_counterdiabatic.
inline constexpr double kDegeneracyThreshold = 1e-9;

/// Numerical transitionless-driving term i Σ_n |∂_t λ_n⟩⟨λ_n| at time t with
/// the diagonal (Berry phase) part removed in the instantaneous eigenbasis.
/// Eigenvectors at t ± dt/2 are phase-aligned to those at t before the
/// central difference. Throws DegeneracyError when the smallest gap falls
/// below degeneracy_threshold·‖H(t)‖.
Eigen::MatrixXcd generic_counterdiabatic(const HermitianSchedule& hamiltonian, double t,
                                         double dt = 1e-6,
                                         double degeneracy_threshold = kDegeneracyThreshold);

}  // namespace tqdfock
