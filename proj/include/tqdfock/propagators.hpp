#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tqdfock/hamiltonians.hpp"
#include "tqdfock/observables.hpp"

namespace tqdfock {

struct TimeGrid {
    double t_start = -4.0;
    double t_end = 4.0;
    double dt = 1e-3;
    int stride = 10;

    /// Throws ParameterError unless t_start < t_end, dt > 0, stride ≥ 1 and
    /// the window is an integer number of steps to within 1e-9 relative.
    void validate() const;
    std::size_t steps() const;
    /// t_start + k·dt, not accumulated.
    double time_at(std::size_t step) const;
};

struct Sample {
    double t;
    State state;
};

/// Samples at every stride-th step; the final step is always recorded.
struct Trajectory {
    ProductBasis basis;
    std::vector<Sample> samples;
};

using HamiltonianFn = std::function<Operator(double)>;

/// Drift of ‖ψ‖² (or Tr ρ) beyond this aborts the integration.
inline constexpr double kConservationFailure = 1e-6;
/// Most negative eigenvalue of ρ tolerated before aborting.
inline constexpr double kNegativityFailure = -1e-6;

/// Fixed-step classical RK4 integration of i∂_tψ = H(t)ψ.
Trajectory propagate_schrodinger(const HamiltonianFn& hamiltonian, const ProductBasis& basis,
                                 const StateVector& psi0, const TimeGrid& grid);

/// Fixed-step RK4 integration of
///   ∂_tρ = −i(H′ρ − ρH′†) + κ aρa† + (Γ/2) Σ_j S_j ρ S_j†
/// with H′ the dissipative effective Hamiltonian. ρ is replaced by
/// (ρ+ρ†)/2 after every step. Effective model only.
Trajectory propagate_lindblad(const ModelConfig& config, const ProductBasis& basis,
                              const DensityMatrix& rho0, const TimeGrid& grid);

/// Max over samples of the total |e_m⟩ population. Full model only.
double elimination_residual(const Trajectory& trajectory);

}  // namespace tqdfock
