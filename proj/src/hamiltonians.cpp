#include "tqdfock/hamiltonians.hpp"

#include <cmath>

#include "tqdfock/errors.hpp"

namespace tqdfock {

namespace {

const std::complex<double> kI(0.0, 1.0);

void require_model(const ProductBasis& basis, ModelKind model, const char* what) {
    if (basis.model() != model) {
        throw ModelMismatchError(std::string(what) + " requires a " + to_string(model) +
                                 " basis, got " + to_string(basis.model()));
    }
}

// c·(|upper⟩⟨lower| ⊗ A) + h.c. with A = 1 or A = a.
void add_coupling(Operator& h, const ProductBasis& basis, Level upper, Level lower,
                  std::complex<double> c, bool with_annihilation) {
    const int shift = with_annihilation ? 1 : 0;
    for (int n = shift; n <= basis.n_max(); ++n) {
        const double amp = with_annihilation ? std::sqrt(static_cast<double>(n)) : 1.0;
        const int row = basis.index(upper, n - shift);
        const int col = basis.index(lower, n);
        h(row, col) += c * amp;
        h(col, row) += std::conj(c) * amp;
    }
}

void add_detuning(Operator& h, const ProductBasis& basis, Level level, std::complex<double> d) {
    for (int n = 0; n <= basis.n_max(); ++n) {
        const int k = basis.index(level, n);
        h(k, k) += d;
    }
}

Operator stirap_part(const ProductBasis& basis, const ControlValues& c, double delta) {
    Operator h = Operator::Zero(basis.dimension(), basis.dimension());
    add_detuning(h, basis, Level::e, delta);
    add_coupling(h, basis, Level::e, Level::g1, c.omega_r, false);
    add_coupling(h, basis, Level::e, Level::g2, c.g, true);
    return h;
}

}  // namespace

std::string to_string(DriveKind drive) { return drive == DriveKind::stirap ? "stirap" : "tqd"; }

void ModelConfig::validate() const {
    pulses.validate();
    if (dissipation) {
        if (!(dissipation->gamma >= 0.0) || !(dissipation->kappa >= 0.0)) {
            throw ParameterError("decay rates gamma and kappa must be non-negative");
        }
    }
    if (model == ModelKind::full && drive == DriveKind::tqd && !(pulses.delta_m > 0.0)) {
        throw ParameterError("auxiliary pulses require delta_m > 0");
    }
}

ScheduleKind ModelConfig::schedule_kind() const {
    if (drive == DriveKind::stirap) return ScheduleKind::stirap;
    return model == ModelKind::full ? ScheduleKind::tqd_full : ScheduleKind::tqd_effective;
}

ControlSchedule ModelConfig::schedule() const { return ControlSchedule(pulses, schedule_kind()); }

Operator full_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t) {
    require_model(basis, ModelKind::full, "full_hamiltonian");
    if (config.model != ModelKind::full) {
        throw ModelMismatchError("full_hamiltonian called with an effective-model config");
    }
    const ControlValues c = config.schedule().at(t);
    Operator h = stirap_part(basis, c, config.pulses.delta);
    add_detuning(h, basis, Level::e_m, config.pulses.delta_m);
    add_coupling(h, basis, Level::e_m, Level::g1, kI * c.omega_m, false);
    add_coupling(h, basis, Level::e_m, Level::g2, c.g_m, true);
    return h;
}

Operator effective_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t) {
    require_model(basis, ModelKind::effective, "effective_hamiltonian");
    if (config.model != ModelKind::effective) {
        throw ModelMismatchError("effective_hamiltonian called with a full-model config");
    }
    const ControlValues c = config.schedule().at(t);
    Operator h = stirap_part(basis, c, config.pulses.delta);
    if (c.omega1 != 0.0) {
        // iΩ₁ |g1, n−1⟩⟨g2, n| √n + h.c.
        for (int n = 1; n <= basis.n_max(); ++n) {
            const int row = basis.index(Level::g1, n - 1);
            const int col = basis.index(Level::g2, n);
            const std::complex<double> v = kI * c.omega1 * std::sqrt(static_cast<double>(n));
            h(row, col) += v;
            h(col, row) += std::conj(v);
        }
    }
    return h;
}

double effective_raman_coupling(double omega_m, double g_m, double delta_m) {
    if (delta_m == 0.0) {
        throw ParameterError("effective Raman coupling undefined for delta_m = 0");
    }
    return omega_m * g_m / delta_m;
}

Operator dissipative_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t) {
    if (!config.dissipation) {
        throw ParameterError("dissipative_hamiltonian requires gamma/kappa to be configured");
    }
    Operator h = effective_hamiltonian(config, basis, t);
    const double gamma = config.dissipation->gamma;
    const double kappa = config.dissipation->kappa;
    for (int k = 0; k < basis.dimension(); ++k) {
        const auto label = basis.label(k);
        double decay = kappa * label.n;
        if (label.level == Level::e) decay += gamma;
        h(k, k) -= kI * (0.5 * decay);
    }
    return h;
}

Operator model_hamiltonian(const ModelConfig& config, const ProductBasis& basis, double t) {
    return config.model == ModelKind::full ? full_hamiltonian(config, basis, t)
                                           : effective_hamiltonian(config, basis, t);
}

Eigen::Matrix3cd single_excitation_block(const Operator& op, const ProductBasis& basis) {
    const auto idx = single_excitation_indices(basis);
    Eigen::Matrix3cd block;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            block(r, c) = op(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
    return block;
}

}  // namespace tqdfock
