#pragma once

#include <optional>

#include "tqdfock/pulses.hpp"
#include "tqdfock/quantum_core.hpp"

namespace tqdfock {

enum class DriveKind { stirap, tqd };

std::string to_string(DriveKind drive);

struct Dissipation {
    double gamma = 0.0;  // atomic spontaneous emission from |e⟩
    double kappa = 0.0;  // cavity field decay
};

struct ModelConfig {
    ModelKind model = ModelKind::effective;
    DriveKind drive = DriveKind::stirap;
    PulseParameters pulses{};
    std::optional<Dissipation> dissipation{};

    void validate() const;
    ScheduleKind schedule_kind() const;
    ControlSchedule schedule() const;
};

/// Double-Λ Hamiltonian in the rotating frame:
///   Δ|e⟩⟨e| + Δ_m|e_m⟩⟨e_m| + Ω_R S₁† + g S₂†a + iΩ_m F₁† + g_m F₂†a + h.c.
/// The auxiliary pump enters with a relative phase i so that eliminating
/// |e_m⟩ yields the +iΩ₁ coupling of the effective model. Under drive=stirap
/// the auxiliary pair is off. The cavity-frequency term is absorbed into the
/// detunings.
Operator full_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t);

/// H₀ + H₁′ with H₀ = Δ|e⟩⟨e| + Ω_R S₁† + g S₂†a + h.c. and
/// H₁′ = iΩ₁|g1⟩⟨g2|a + h.c. (Ω₁ ≡ 0 under drive=stirap).
Operator effective_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t);

/// Ω_m g_m / Δ_m.
double effective_raman_coupling(double omega_m, double g_m, double delta_m);

/// H_eff − iΓ|e⟩⟨e|/2 − iκ a†a/2.
Operator dissipative_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t);

/// Dispatches on config.model.
Operator model_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t);

/// Restriction of an operator to {|g1,0⟩, |e,0⟩, |g2,1⟩}.
Eigen::Matrix3cd single_excitation_block(const Operator& op, const ProductBasis& basis);

}  // namespace tqdfock
