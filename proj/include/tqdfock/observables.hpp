#pragma once

#include <map>
#include <optional>
#include <variant>

#include "tqdfock/quantum_core.hpp"

namespace tqdfock {

using State = std::variant<StateVector, DensityMatrix>;

/// ⟨n⟩ below this leaves the Mandel Q factor undefined.
inline constexpr double kMandelUndefinedBelow = 1e-12;

using Populations = std::map<BasisLabel, double>;

Populations populations(const ProductBasis& basis, const StateVector& psi);
Populations populations(const ProductBasis& basis, const DensityMatrix& rho);
Populations populations(const ProductBasis& basis, const State& state);

double population(const ProductBasis& basis, const State& state, Level level, int n);
/// Summed over all photon numbers.
double level_population(const ProductBasis& basis, const State& state, Level level);

double mean_photon_number(const ProductBasis& basis, const StateVector& psi);
double mean_photon_number(const ProductBasis& basis, const DensityMatrix& rho);
double mean_photon_number(const ProductBasis& basis, const State& state);

/// Q = −1 + (⟨n²⟩ − ⟨n⟩²)/⟨n⟩; empty when ⟨n⟩ < kMandelUndefinedBelow.
std::optional<double> mandel_q(const ProductBasis& basis, const StateVector& psi);
std::optional<double> mandel_q(const ProductBasis& basis, const DensityMatrix& rho);
std::optional<double> mandel_q(const ProductBasis& basis, const State& state);

/// |⟨λ₀|ψ⟩|² or ⟨λ₀|ρ|λ₀⟩ with λ₀ embedded in the product basis.
double dark_state_overlap(const ProductBasis& basis, const StateVector& psi, const EigenSystem& es);
double dark_state_overlap(const ProductBasis& basis, const DensityMatrix& rho,
                          const EigenSystem& es);
double dark_state_overlap(const ProductBasis& basis, const State& state, const EigenSystem& es);

/// ‖ψ‖² or Re Tr ρ.
double norm_or_trace(const State& state);

struct ObservablesRecord {
    double t = 0.0;
    Populations populations;
    std::optional<double> dark_overlap;
    double mean_photon_n = 0.0;
    std::optional<double> mandel_q;
    double norm_or_trace = 0.0;
};

/// dark_overlap is filled only when an eigensystem is supplied.
ObservablesRecord measure(const ProductBasis& basis, const State& state, double t,
                          const std::optional<EigenSystem>& eigensystem);

}  // namespace tqdfock
