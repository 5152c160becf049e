#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tqdfock {

enum class Level { g1, e, g2, e_m };
enum class ModelKind { effective, full };

std::string to_string(Level level);
std::string to_string(ModelKind model);

using Operator = Eigen::MatrixXcd;

struct BasisLabel {
    Level level;
    int n;
    auto operator<=>(const BasisLabel&) const = default;
};

/// Truncated atom ⊗ Fock basis. Atomic-major, Fock-minor flat indexing:
/// index(level, n) = position(level)·(n_max+1) + n, with atomic order
/// g1, e, g2 (effective) or g1, e, g2, e_m (full).
class ProductBasis {
public:
    ProductBasis(ModelKind model, int n_max);

    ModelKind model() const noexcept { return model_; }
    int n_max() const noexcept { return n_max_; }
    int fock_dim() const noexcept { return n_max_ + 1; }
    int dimension() const noexcept { return static_cast<int>(levels_.size()) * fock_dim(); }
    const std::vector<Level>& levels() const noexcept { return levels_; }

    bool has(Level level) const noexcept;
    /// Throws ModelMismatchError for an absent level, ParameterError for n out of range.
    int index(Level level, int n) const;
    BasisLabel label(int index) const;
    /// "g1_0", "e_0", "g2_1", "em_0", ...
    std::string label_name(int index) const;

    bool operator==(const ProductBasis&) const = default;

private:
    int position(Level level) const;

    ModelKind model_;
    int n_max_;
    std::vector<Level> levels_;
};

ProductBasis build_basis(ModelKind model, int n_max);

struct StateVector {
    Eigen::VectorXcd amplitudes;
    double t = 0.0;
};

struct DensityMatrix {
    Eigen::MatrixXcd rho;
    double t = 0.0;
};

Eigen::VectorXcd basis_vector(const ProductBasis& basis, Level level, int n);
StateVector basis_state(const ProductBasis& basis, Level level, int n, double t = 0.0);
DensityMatrix pure_density(const StateVector& psi);

struct LadderOperators {
    Operator a;
    Operator a_dag;
};

LadderOperators ladder_operators(const ProductBasis& basis);
Operator number_operator(const ProductBasis& basis);

enum class Raising { S1, S2, F1, F2 };

/// S_j† = |e⟩⟨g_j|, F_j† = |e_m⟩⟨g_j|, each ⊗ 1_Fock. F requires the full model.
Operator atomic_raising(const ProductBasis& basis, Raising which);

/// |to⟩⟨from| ⊗ 1_Fock.
Operator atomic_transition(const ProductBasis& basis, Level to, Level from);
Operator atomic_projector(const ProductBasis& basis, Level level);

/// Instantaneous eigensystem of the STIRAP Hamiltonian restricted to
/// {|g1,0⟩, |e,0⟩, |g2,1⟩}. Index 0 is the dark state λ₀, 1 is λ₊, 2 is λ₋.
struct EigenSystem {
    double theta = 0.0;
    double phi = 0.0;
    std::array<double, 3> eigenvalues{};
    std::array<Eigen::Vector3cd, 3> eigenvectors{};

    const Eigen::Vector3cd& dark() const { return eigenvectors[0]; }
};

/// The 3×3 STIRAP Hamiltonian on the single-excitation subspace.
Eigen::Matrix3cd stirap_subspace_hamiltonian(double omega_r, double g, double delta);

/// tan θ = Ω_R/g, tan 2φ = 2Ω/Δ. Dark state λ₀ = cos θ|g1,0⟩ − sin θ|g2,1⟩
/// so that H₀λ₀ = 0 exactly; λ₊ = sin φ|b⟩ + cos φ|e,0⟩ and
/// λ₋ = cos φ|b⟩ − sin φ|e,0⟩ with |b⟩ = sin θ|g1,0⟩ + cos θ|g2,1⟩.
/// Throws ParameterError when Ω_R = g = 0.
EigenSystem analytic_eigensystem(double omega_r, double g, double delta);

/// Flat indices of |g1,0⟩, |e,0⟩, |g2,1⟩ in an effective or full basis.
std::array<int, 3> single_excitation_indices(const ProductBasis& basis);

/// Lift a subspace vector into the full product basis (zero elsewhere).
Eigen::VectorXcd embed_single_excitation(const ProductBasis& basis, const Eigen::Vector3cd& v);

}  // namespace tqdfock
