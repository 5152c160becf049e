#include "tqdfock/quantum_core.hpp"

#include <algorithm>
#include <cmath>

#include "tqdfock/errors.hpp"

namespace tqdfock {

std::string to_string(Level level) {
    switch (level) {
        case Level::g1: return "g1";
        case Level::e: return "e";
        case Level::g2: return "g2";
        case Level::e_m: return "em";
    }
    return "?";
}

std::string to_string(ModelKind model) {
    return model == ModelKind::effective ? "effective" : "full";
}

ProductBasis::ProductBasis(ModelKind model, int n_max) : model_(model), n_max_(n_max) {
    if (n_max < 1) {
        throw ParameterError("n_max must be at least 1, got " + std::to_string(n_max));
    }
    levels_ = {Level::g1, Level::e, Level::g2};
    if (model == ModelKind::full) levels_.push_back(Level::e_m);
}

bool ProductBasis::has(Level level) const noexcept {
    return std::find(levels_.begin(), levels_.end(), level) != levels_.end();
}

int ProductBasis::position(Level level) const {
    const auto it = std::find(levels_.begin(), levels_.end(), level);
    if (it == levels_.end()) {
        throw ModelMismatchError("level " + to_string(level) + " is not part of the " +
                                 to_string(model_) + " basis");
    }
    return static_cast<int>(it - levels_.begin());
}

int ProductBasis::index(Level level, int n) const {
    if (n < 0 || n > n_max_) {
        throw ParameterError("photon number " + std::to_string(n) + " outside 0.." +
                             std::to_string(n_max_));
    }
    return position(level) * fock_dim() + n;
}

BasisLabel ProductBasis::label(int index) const {
    if (index < 0 || index >= dimension()) {
        throw ParameterError("basis index " + std::to_string(index) + " out of range");
    }
    return {levels_[static_cast<std::size_t>(index / fock_dim())], index % fock_dim()};
}

std::string ProductBasis::label_name(int index) const {
    const auto l = label(index);
    return to_string(l.level) + "_" + std::to_string(l.n);
}

ProductBasis build_basis(ModelKind model, int n_max) { return ProductBasis(model, n_max); }

Eigen::VectorXcd basis_vector(const ProductBasis& basis, Level level, int n) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.dimension());
    v(basis.index(level, n)) = 1.0;
    return v;
}

StateVector basis_state(const ProductBasis& basis, Level level, int n, double t) {
    return {basis_vector(basis, level, n), t};
}

DensityMatrix pure_density(const StateVector& psi) {
    return {psi.amplitudes * psi.amplitudes.adjoint(), psi.t};
}

LadderOperators ladder_operators(const ProductBasis& basis) {
    const int dim = basis.dimension();
    Operator a = Operator::Zero(dim, dim);
    for (Level level : basis.levels()) {
        for (int n = 1; n <= basis.n_max(); ++n) {
            a(basis.index(level, n - 1), basis.index(level, n)) = std::sqrt(static_cast<double>(n));
        }
    }
    Operator a_dag = a.adjoint();
    return {std::move(a), std::move(a_dag)};
}

Operator number_operator(const ProductBasis& basis) {
    Operator num = Operator::Zero(basis.dimension(), basis.dimension());
    for (int k = 0; k < basis.dimension(); ++k) num(k, k) = basis.label(k).n;
    return num;
}

Operator atomic_transition(const ProductBasis& basis, Level to, Level from) {
    Operator op = Operator::Zero(basis.dimension(), basis.dimension());
    for (int n = 0; n <= basis.n_max(); ++n) op(basis.index(to, n), basis.index(from, n)) = 1.0;
    return op;
}

Operator atomic_projector(const ProductBasis& basis, Level level) {
    return atomic_transition(basis, level, level);
}

Operator atomic_raising(const ProductBasis& basis, Raising which) {
    const bool is_f = which == Raising::F1 || which == Raising::F2;
    if (is_f && !basis.has(Level::e_m)) {
        throw ModelMismatchError("F operators require the full (four-level) basis");
    }
    const Level upper = is_f ? Level::e_m : Level::e;
    const Level lower = (which == Raising::S1 || which == Raising::F1) ? Level::g1 : Level::g2;
    return atomic_transition(basis, upper, lower);
}

Eigen::Matrix3cd stirap_subspace_hamiltonian(double omega_r, double g, double delta) {
    Eigen::Matrix3cd h;
    h << 0.0, omega_r, 0.0,
         omega_r, delta, g,
         0.0, g, 0.0;
    return h;
}

EigenSystem analytic_eigensystem(double omega_r, double g, double delta) {
    const double omega = std::hypot(omega_r, g);
    if (!(omega > 0.0)) {
        throw ParameterError("mixing angle undefined: Omega_R = g = 0");
    }
    EigenSystem es;
    es.theta = std::atan2(omega_r, g);
    es.phi = 0.5 * std::atan2(2.0 * omega, delta);

    const double root = std::sqrt(delta * delta + 4.0 * omega * omega);
    // Avoid cancellation in the smaller-magnitude root: λ₊λ₋ = −Ω².
    const double big = 0.5 * (delta + std::copysign(root, delta == 0.0 ? 1.0 : delta));
    const double small = -omega * omega / big;
    es.eigenvalues = {0.0, delta >= 0.0 ? big : small, delta >= 0.0 ? small : big};

    const double st = omega_r / omega;
    const double ct = g / omega;
    const double sp = std::sin(es.phi);
    const double cp = std::cos(es.phi);
    es.eigenvectors[0] = Eigen::Vector3cd(ct, 0.0, -st);
    es.eigenvectors[1] = Eigen::Vector3cd(st * sp, cp, ct * sp);
    es.eigenvectors[2] = Eigen::Vector3cd(st * cp, -sp, ct * cp);
    return es;
}

std::array<int, 3> single_excitation_indices(const ProductBasis& basis) {
    return {basis.index(Level::g1, 0), basis.index(Level::e, 0), basis.index(Level::g2, 1)};
}

Eigen::VectorXcd embed_single_excitation(const ProductBasis& basis, const Eigen::Vector3cd& v) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(basis.dimension());
    const auto idx = single_excitation_indices(basis);
    for (int k = 0; k < 3; ++k) out(idx[static_cast<std::size_t>(k)]) = v(k);
    return out;
}

}  // namespace tqdfock
