#include "tqdfock/observables.hpp"

#include <cmath>

namespace tqdfock {

namespace {

Eigen::VectorXd diagonal_weights(const State& state) {
    return std::visit(
        [](const auto& s) -> Eigen::VectorXd {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, StateVector>) {
                return s.amplitudes.cwiseAbs2();
            } else {
                return s.rho.diagonal().real();
            }
        },
        state);
}

Populations to_map(const ProductBasis& basis, const Eigen::VectorXd& w) {
    Populations out;
    for (int k = 0; k < basis.dimension(); ++k) out[basis.label(k)] = w(k);
    return out;
}

struct Moments {
    double n1 = 0.0;
    double n2 = 0.0;
};

Moments photon_moments(const ProductBasis& basis, const Eigen::VectorXd& w) {
    Moments m;
    for (int k = 0; k < basis.dimension(); ++k) {
        const double n = basis.label(k).n;
        m.n1 += n * w(k);
        m.n2 += n * n * w(k);
    }
    return m;
}

std::optional<double> q_from(const Moments& m) {
    if (m.n1 < kMandelUndefinedBelow) return std::nullopt;
    return -1.0 + (m.n2 - m.n1 * m.n1) / m.n1;
}

}  // namespace

Populations populations(const ProductBasis& basis, const StateVector& psi) {
    return to_map(basis, psi.amplitudes.cwiseAbs2());
}

Populations populations(const ProductBasis& basis, const DensityMatrix& rho) {
    return to_map(basis, rho.rho.diagonal().real());
}

Populations populations(const ProductBasis& basis, const State& state) {
    return to_map(basis, diagonal_weights(state));
}

double population(const ProductBasis& basis, const State& state, Level level, int n) {
    return diagonal_weights(state)(basis.index(level, n));
}

double level_population(const ProductBasis& basis, const State& state, Level level) {
    const Eigen::VectorXd w = diagonal_weights(state);
    double sum = 0.0;
    for (int n = 0; n <= basis.n_max(); ++n) sum += w(basis.index(level, n));
    return sum;
}

// Number operator is diagonal in the product basis, so ⟨n⟩ and ⟨n²⟩ only
// need the diagonal weights.
double mean_photon_number(const ProductBasis& basis, const StateVector& psi) {
    return photon_moments(basis, psi.amplitudes.cwiseAbs2()).n1;
}

double mean_photon_number(const ProductBasis& basis, const DensityMatrix& rho) {
    return photon_moments(basis, rho.rho.diagonal().real()).n1;
}

double mean_photon_number(const ProductBasis& basis, const State& state) {
    return photon_moments(basis, diagonal_weights(state)).n1;
}

std::optional<double> mandel_q(const ProductBasis& basis, const StateVector& psi) {
    return q_from(photon_moments(basis, psi.amplitudes.cwiseAbs2()));
}

std::optional<double> mandel_q(const ProductBasis& basis, const DensityMatrix& rho) {
    return q_from(photon_moments(basis, rho.rho.diagonal().real()));
}

std::optional<double> mandel_q(const ProductBasis& basis, const State& state) {
    return q_from(photon_moments(basis, diagonal_weights(state)));
}

double dark_state_overlap(const ProductBasis& basis, const StateVector& psi,
                          const EigenSystem& es) {
    const Eigen::VectorXcd dark = embed_single_excitation(basis, es.dark());
    return std::norm(dark.dot(psi.amplitudes));
}

double dark_state_overlap(const ProductBasis& basis, const DensityMatrix& rho,
                          const EigenSystem& es) {
    const Eigen::VectorXcd dark = embed_single_excitation(basis, es.dark());
    return dark.dot(rho.rho * dark).real();
}

double dark_state_overlap(const ProductBasis& basis, const State& state, const EigenSystem& es) {
    return std::visit([&](const auto& s) { return dark_state_overlap(basis, s, es); }, state);
}

double norm_or_trace(const State& state) {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, StateVector>) {
                return s.amplitudes.squaredNorm();
            } else {
                return s.rho.trace().real();
            }
        },
        state);
}

ObservablesRecord measure(const ProductBasis& basis, const State& state, double t,
                          const std::optional<EigenSystem>& eigensystem) {
    ObservablesRecord rec;
    rec.t = t;
    const Eigen::VectorXd w = diagonal_weights(state);
    rec.populations = to_map(basis, w);
    const Moments m = photon_moments(basis, w);
    rec.mean_photon_n = m.n1;
    rec.mandel_q = q_from(m);
    rec.norm_or_trace = norm_or_trace(state);
    if (eigensystem) rec.dark_overlap = dark_state_overlap(basis, state, *eigensystem);
    return rec;
}

}  // namespace tqdfock
