#include <doctest.h>

#include <cmath>

#include "tqdfock/errors.hpp"
#include "tqdfock/propagators.hpp"

using namespace tqdfock;

namespace {

ModelConfig effective(DriveKind drive, double omega0 = 2.0) {
    ModelConfig c;
    c.model = ModelKind::effective;
    c.drive = drive;
    c.pulses.omega0 = omega0;
    return c;
}

Trajectory run_pure(const ModelConfig& c, const ProductBasis& b, TimeGrid grid = {}) {
    const HamiltonianFn h = [c, b](double t) { return model_hamiltonian(c, b, t); };
    return propagate_schrodinger(h, b, basis_state(b, Level::g1, 0, grid.t_start), grid);
}

const StateVector& pure(const Sample& s) { return std::get<StateVector>(s.state); }
const DensityMatrix& mixed(const Sample& s) { return std::get<DensityMatrix>(s.state); }

}  // namespace

TEST_CASE("time grid") {
    TimeGrid g;
    CHECK(g.steps() == 8000);
    CHECK(g.time_at(0) == -4.0);
    CHECK(g.time_at(8000) == 4.0);
    CHECK(g.time_at(4000) == 0.0);
    CHECK_THROWS_AS((TimeGrid{1.0, 0.0, 1e-3, 1}.validate()), ParameterError);
    CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 0.0, 1}.validate()), ParameterError);
    CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 0.3, 1}.validate()), ParameterError);
    CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 0.1, 0}.validate()), ParameterError);
}

TEST_CASE("Schrodinger propagation basics") {
    const ProductBasis b(ModelKind::effective, 1);
    const TimeGrid grid{0.0, 2.0, 1e-3, 7};

    SUBCASE("no dynamics") {
        const HamiltonianFn zero = [&](double) { return Operator::Zero(6, 6).eval(); };
        const auto psi0 = basis_state(b, Level::g1, 0);
        const auto traj = propagate_schrodinger(zero, b, psi0, grid);
        for (const auto& s : traj.samples) CHECK(pure(s).amplitudes == psi0.amplitudes);
    }
    SUBCASE("stride recording keeps the final step") {
        const HamiltonianFn zero = [&](double) { return Operator::Zero(6, 6).eval(); };
        const auto traj = propagate_schrodinger(zero, b, basis_state(b, Level::g1, 0), grid);
        CHECK(traj.samples.size() == 2000 / 7 + 2);
        CHECK(traj.samples.back().t == 2.0);
        for (std::size_t k = 1; k < traj.samples.size(); ++k)
            CHECK(traj.samples[k].t > traj.samples[k - 1].t);
    }
    SUBCASE("excited eigenstate picks up a global phase") {
        const double delta = 1.7;
        const Operator h = delta * atomic_projector(b, Level::e);
        const HamiltonianFn fn = [&](double) { return h; };
        const auto traj = propagate_schrodinger(fn, b, basis_state(b, Level::e, 0), grid);
        for (const auto& s : traj.samples) {
            const auto amp = pure(s).amplitudes(b.index(Level::e, 0));
            CHECK(std::abs(std::abs(amp) - 1.0) <= 1e-10);
            CHECK(std::abs(amp - std::exp(std::complex<double>(0.0, -delta * s.t))) <= 1e-10);
        }
    }
    SUBCASE("unstable step is reported") {
        const Operator h = 100.0 * atomic_projector(b, Level::e);
        const HamiltonianFn fn = [&](double) { return h; };
        CHECK_THROWS_AS(propagate_schrodinger(fn, b, basis_state(b, Level::e, 0),
                                              TimeGrid{0.0, 2.0, 0.1, 1}),
                        IntegrationError);
    }
    SUBCASE("bad initial state") {
        const HamiltonianFn zero = [&](double) { return Operator::Zero(6, 6).eval(); };
        StateVector bad{2.0 * basis_vector(b, Level::g1, 0)};
        CHECK_THROWS_AS(propagate_schrodinger(zero, b, bad, grid), ParameterError);
    }
}

TEST_CASE("STIRAP and TQD population transfer") {
    const ProductBasis b(ModelKind::effective, 1);
    const int p_g2_1 = b.index(Level::g2, 1);

    SUBCASE("STIRAP at Omega0 T = 2 stops near 73.5 percent") {
        const auto traj = run_pure(effective(DriveKind::stirap), b);
        const double p = std::norm(pure(traj.samples.back()).amplitudes(p_g2_1));
        CHECK(std::abs(p - 0.735) <= 0.05);
        // Independent Python RK4 on the 3×3 block, same window and step.
        CHECK(p == doctest::Approx(0.7353044495025493).epsilon(1e-9));
        CHECK(std::abs(pure(traj.samples.back()).amplitudes.squaredNorm() - 1.0) <= 1e-8);
    }
    SUBCASE("TQD is transitionless and follows the dark state") {
        const auto c = effective(DriveKind::tqd);
        const auto traj = run_pure(c, b, TimeGrid{-4.0, 4.0, 1e-3, 1});
        double max_e = 0.0;
        double min_overlap = 1.0;
        for (const auto& s : traj.samples) {
            max_e = std::max(max_e, std::norm(pure(s).amplitudes(b.index(Level::e, 0))));
            const auto pair = stirap_pair(c.pulses, s.t);
            const auto es = analytic_eigensystem(pair.omega_r, pair.g, c.pulses.delta);
            min_overlap = std::min(min_overlap, dark_state_overlap(b, pure(s), es));
        }
        CHECK(max_e <= 1e-4);
        CHECK(min_overlap >= 0.999);
        CHECK(std::norm(pure(traj.samples.back()).amplitudes(p_g2_1)) >= 0.999);
    }
}

TEST_CASE("truncation independence and step convergence") {
    for (auto drive : {DriveKind::stirap, DriveKind::tqd}) {
        const auto c = effective(drive);
        const ProductBasis small(ModelKind::effective, 1);
        const ProductBasis large(ModelKind::effective, 3);
        const auto a = run_pure(c, small);
        const auto z = run_pure(c, large);
        REQUIRE(a.samples.size() == z.samples.size());
        for (std::size_t k = 0; k < a.samples.size(); ++k) {
            for (Level l : small.levels())
                for (int n = 0; n <= 1; ++n)
                    CHECK(std::abs(population(small, a.samples[k].state, l, n) -
                                   population(large, z.samples[k].state, l, n)) <= 1e-10);
        }

        TimeGrid half;
        half.dt = 5e-4;
        const auto fine = run_pure(c, small, half);
        for (int k = 0; k < small.dimension(); ++k) {
            CHECK(std::abs(std::norm(pure(a.samples.back()).amplitudes(k)) -
                           std::norm(pure(fine.samples.back()).amplitudes(k))) <= 1e-6);
        }
    }
}

TEST_CASE("Lindblad propagation") {
    const ProductBasis b(ModelKind::effective, 1);

    SUBCASE("closed-system limit matches the pure-state propagator") {
        for (auto drive : {DriveKind::stirap, DriveKind::tqd}) {
            ModelConfig c = effective(drive);
            const auto psi_traj = run_pure(c, b);
            c.dissipation = Dissipation{0.0, 0.0};
            const auto rho_traj =
                propagate_lindblad(c, b, pure_density(basis_state(b, Level::g1, 0, -4.0)), TimeGrid{});
            REQUIRE(psi_traj.samples.size() == rho_traj.samples.size());
            double worst = 0.0;
            for (std::size_t k = 0; k < psi_traj.samples.size(); ++k) {
                const auto& psi = pure(psi_traj.samples[k]).amplitudes;
                const Eigen::MatrixXcd proj = psi * psi.adjoint();
                worst = std::max(worst, (proj - mixed(rho_traj.samples[k]).rho).cwiseAbs().maxCoeff());
            }
            CHECK(worst <= 1e-8);
        }
    }
    SUBCASE("pure cavity decay") {
        ModelConfig c = effective(DriveKind::stirap, 0.0);
        const double kappa = 0.3;
        c.dissipation = Dissipation{0.0, kappa};
        const TimeGrid grid{0.0, 5.0, 1e-3, 50};
        const auto traj = propagate_lindblad(c, b, pure_density(basis_state(b, Level::g2, 1)), grid);
        for (const auto& s : traj.samples) {
            CHECK(std::abs(mean_photon_number(b, mixed(s)) - std::exp(-kappa * s.t)) <= 1e-6);
            CHECK(std::abs(mixed(s).rho.trace().real() - 1.0) <= 1e-8);
        }
    }
    SUBCASE("atomic decay splits between the two ground states") {
        ModelConfig c = effective(DriveKind::stirap, 0.0);
        c.dissipation = Dissipation{2.0, 0.0};
        const auto traj = propagate_lindblad(c, b, pure_density(basis_state(b, Level::e, 0)),
                                             TimeGrid{0.0, 3.0, 1e-3, 100});
        const auto& last = mixed(traj.samples.back());
        const double remaining = std::exp(-2.0 * 3.0);
        CHECK(std::abs(last.rho(b.index(Level::e, 0), b.index(Level::e, 0)).real() - remaining) <= 1e-8);
        CHECK(std::abs(last.rho(b.index(Level::g1, 0), b.index(Level::g1, 0)).real() -
                       0.5 * (1 - remaining)) <= 1e-8);
        CHECK(std::abs(last.rho(b.index(Level::g2, 0), b.index(Level::g2, 0)).real() -
                       0.5 * (1 - remaining)) <= 1e-8);
    }
    SUBCASE("TQD retains more photons than STIRAP under loss") {
        auto lossy = [&](DriveKind d) {
            ModelConfig c = effective(d, 5.0);
            c.dissipation = Dissipation{5.0, 0.05};
            const auto traj = propagate_lindblad(c, b, pure_density(basis_state(b, Level::g1, 0, -4.0)),
                                                 TimeGrid{});
            for (const auto& s : traj.samples) {
                const auto& rho = mixed(s).rho;
                CHECK(std::abs(rho.trace().real() - 1.0) <= 1e-8);
                CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() <= 1e-10);
            }
            return mean_photon_number(b, mixed(traj.samples.back()));
        };
        CHECK(lossy(DriveKind::tqd) > lossy(DriveKind::stirap));
    }
    SUBCASE("errors") {
        ModelConfig c = effective(DriveKind::tqd);
        const auto rho0 = pure_density(basis_state(b, Level::g1, 0, -4.0));
        CHECK_THROWS_AS(propagate_lindblad(c, b, rho0, TimeGrid{}), ParameterError);
        c.dissipation = Dissipation{1000.0, 0.0};
        CHECK_THROWS_AS(propagate_lindblad(c, b, pure_density(basis_state(b, Level::e, 0)),
                                           TimeGrid{0.0, 1.0, 0.01, 1}),
                        IntegrationError);
        ModelConfig f = c;
        f.model = ModelKind::full;
        f.dissipation = Dissipation{1.0, 0.0};
        const ProductBasis fb(ModelKind::full, 1);
        CHECK_THROWS_AS(propagate_lindblad(f, fb, pure_density(basis_state(fb, Level::g1, 0)), TimeGrid{}),
                        ModelMismatchError);
    }
}

TEST_CASE("adiabatic elimination residual") {
    const ProductBasis fb(ModelKind::full, 1);
    auto residual = [&](DriveKind drive, double delta_m) {
        ModelConfig c;
        c.model = ModelKind::full;
        c.drive = drive;
        c.pulses.delta_m = delta_m;
        return elimination_residual(run_pure(c, fb, TimeGrid{-4.0, 4.0, 1e-3, 1}));
    };
    const double r18 = residual(DriveKind::tqd, 18.0);
    CHECK(r18 <= 0.05);
    CHECK(residual(DriveKind::stirap, 18.0) == 0.0);
    CHECK(residual(DriveKind::tqd, 50.0) < r18);

    const ProductBasis eff(ModelKind::effective, 1);
    CHECK_THROWS_AS(elimination_residual(run_pure(effective(DriveKind::tqd), eff)), ModelMismatchError);
}

TEST_CASE("full model transfers the photon") {
    const ProductBasis fb(ModelKind::full, 1);
    ModelConfig c;
    c.model = ModelKind::full;
    c.drive = DriveKind::tqd;
    const auto traj = run_pure(c, fb);
    CHECK(population(fb, traj.samples.back().state, Level::g2, 1) >= 0.95);
    // Independent Python RK4 on the 4×4 block.
    CHECK(population(fb, traj.samples.back().state, Level::g2, 1) ==
          doctest::Approx(0.991744110).epsilon(1e-7));
}
