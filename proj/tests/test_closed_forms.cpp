#include "qslbath/closed_forms.hpp"
#include "qslbath/bounds.hpp"
#include "qslbath/bruteforce.hpp"
#include "qslbath/models.hpp"
#include "qslbath/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qslbath;

TEST_SUITE_BEGIN("closed_forms");

namespace {

BosonicBathSpec sigma_x_bosonic(std::vector<double> omega, std::vector<double> g, double gamma) {
    BosonicBathSpec spec;
    spec.omega = std::move(omega);
    spec.g.assign(g.begin(), g.end());
    spec.coupling.assign(spec.omega.size(), pauli_x());
    spec.gamma = gamma;
    return spec;
}

SpinBathSpec sigma_x_spin_bath(std::vector<double> omega, std::vector<double> g, double gamma) {
    SpinBathSpec spec;
    spec.omega = std::move(omega);
    spec.g = std::move(g);
    spec.coupling.assign(spec.omega.size(), pauli_x());
    spec.gamma = gamma;
    return spec;
}

}  // namespace

TEST_CASE("bosonic information vanishes in the trivial limit") {
    const DensityMatrix mixed(0.5 * Matrix::Identity(2, 2));
    const Matrix h_system = Matrix::Zero(2, 2);
    const BosonicBathSpec spec = sigma_x_bosonic({1.0, 1.7}, {1.0, 0.8}, 0.9);
    double previous = wy_bosonic(spec, h_system, mixed, 1e-2);
    for (double beta : {5e-3, 2.5e-3, 1.25e-3}) {
        const double current = wy_bosonic(spec, h_system, mixed, beta);
        CHECK(current < previous);
        CHECK(current == doctest::Approx(0.5 * previous).epsilon(0.05));
        previous = current;
    }
    CHECK(previous < 1e-3);
    CHECK_THROWS_AS((void)wy_bosonic(spec, h_system, mixed, 0.0), std::invalid_argument);
}

TEST_CASE("bosonic information matches the truncated brute force at one mode") {
    const double delta = 1.0, gamma = 1.0, beta = 1.0;
    const BlochState polarization(1.0, {0.0, 0.0, 1.0});
    const BosonicBathSpec spec = sigma_x_bosonic({1.0}, {1.0}, gamma);
    const double closed =
        wy_bosonic(spec, 0.5 * delta * pauli_z(), bloch_state(polarization), beta);
    const double brute = wy_spin_boson_bruteforce(delta, gamma, std::vector<double>{1.0},
                                                  std::vector<double>{1.0}, beta, polarization, 40);
    CHECK(closed == doctest::Approx(brute).epsilon(1e-8));
}

TEST_CASE("sparse brute force agrees with the dense composite route") {
    const double delta = 0.9, gamma = 0.7, beta = 1.2;
    const BlochState polarization(0.6, {0.4, 0.5, std::sqrt(1 - 0.16 - 0.25)});
    const std::vector<double> omega{1.0, 1.6};
    const std::vector<double> g{0.8, 1.1};
    const Index cutoff = 12;
    const SpinBosonModel model = build_spin_boson_truncated(delta, gamma, omega, g, cutoff);
    const DensityMatrix system = bloch_state(polarization);
    const DensityMatrix bath = thermal_state(model.h_bath, beta);
    const Matrix drive =
        kron(model.h_system, Matrix::Identity(model.bath_dim, model.bath_dim)) +
        model.h_interaction;
    const double dense = skew_information(system, bath, drive);
    const double sparse =
        wy_spin_boson_bruteforce(delta, gamma, omega, g, beta, polarization, cutoff);
    CHECK(sparse == doctest::Approx(dense).epsilon(1e-10));
}

TEST_CASE("commuting coupling reduces the Bose terms to a tanh difference") {
    // H_S = 0 and S = sigma^z commuting with a diagonal state: the two bath
    // terms cancel up to the Bose-weight difference tanh(beta omega / 4).
    const DensityMatrix diag_state = bloch_state(BlochState(0.8, {0.0, 0.0, 1.0}));
    const double beta = 1.3, omega = 1.4, g = 1.2, gamma = 0.6;
    BosonicBathSpec spec = sigma_x_bosonic({omega}, {g}, gamma);
    spec.coupling = {pauli_z()};
    const double value = wy_bosonic(spec, Matrix::Zero(2, 2), diag_state, beta);
    const double expected = gamma * gamma * g * g *
                            (pauli_z() * pauli_z() * diag_state.matrix()).trace().real() *
                            std::tanh(0.25 * beta * omega);
    CHECK(value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("spin bath information vanishes at infinite temperature") {
    const DensityMatrix mixed(0.5 * Matrix::Identity(2, 2));
    const SpinBathSpec spec = sigma_x_spin_bath({1.0, 0.4}, {1.0, 1.3}, 0.8);
    CHECK(wy_spin_bath(spec, Matrix::Zero(2, 2), mixed, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("spin bath information equals the dense composite value") {
    Rng rng(61);
    for (int bath_spins : {1, 3, 6}) {
        const BlochState polarization(rng.uniform(0.0, 1.0),
                                      {rng.gaussian(), rng.gaussian(), rng.gaussian()});
        const CentralSpinInstance instance = CentralSpinInstance::sample(
            bath_spins, rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5), rng.uniform(0.3, 2.5),
            polarization, 1000 + bath_spins);
        CHECK(instance.information() ==
              doctest::Approx(wy_central_spin_bruteforce(instance)).epsilon(1e-10));
    }
}

TEST_CASE("closed forms are nonnegative on random inputs") {
    Rng rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        const DensityMatrix system(rng.density(2));
        const Matrix h_system = rng.hermitian(2);
        const SpinBathSpec spin =
            sigma_x_spin_bath({rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0)},
                              {rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5)},
                              rng.uniform(0.2, 1.5));
        CHECK(wy_spin_bath(spin, h_system, system, rng.uniform(0.0, 4.0)) >= -1e-10);
        const BosonicBathSpec bosonic =
            sigma_x_bosonic({rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0)},
                            {rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5)},
                            rng.uniform(0.2, 1.5));
        CHECK(wy_bosonic(bosonic, h_system, system, rng.uniform(0.1, 4.0)) >= -1e-10);
    }
}

TEST_CASE("ladder conjugation identity is exact on the truncation") {
    CHECK(bch_conjugation_check(1.0, 1.0, 5) < 1e-12);
    CHECK(bch_conjugation_check(2.0, 0.5, 8) < 1e-12);
    CHECK(bch_conjugation_check(1.7, 0.0, 6) < 1e-14);
}

TEST_CASE("finite spin-bath coefficients: unit couplings give K = beta^2") {
    const std::vector<double> omega{0.3, 1.1, 1.9};
    const std::vector<double> g{1.0, 1.0, 1.0};
    const double beta = 1.7;
    const BoundCoefficients c = spin_bath_coefficients(omega, g, beta);
    CHECK(c.k == doctest::Approx(beta * beta).epsilon(1e-14));
}

TEST_CASE("Ohmic coefficients at alpha = beta = 1") {
    const BoundCoefficients c = ohmic_coefficients(OhmicSpectralDensity(1.0), 1.0);
    CHECK(c.k ==
          doctest::Approx(std::numbers::pi * std::numbers::pi / 3.0 - 1.0).epsilon(1e-12));
    CHECK(c.k == doctest::Approx(2.0 * polygamma(1, 1.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("Ohmic closed forms match quadrature at spot points") {
    for (double alpha : {0.3, 1.0, 4.0}) {
        for (double beta : {0.25, 1.0, 6.0}) {
            const OhmicSpectralDensity j(alpha);
            const BoundCoefficients closed = ohmic_coefficients(j, beta);
            const BoundCoefficients quad = ohmic_coefficients_quadrature(j, beta);
            CHECK(closed.k == doctest::Approx(quad.k).epsilon(1e-8));
            CHECK(closed.m == doctest::Approx(quad.m).epsilon(1e-8));
            CHECK(closed.l == doctest::Approx(quad.l).epsilon(1e-8));
        }
    }
}

TEST_CASE("continuum spin-bath coefficients match quadrature") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (double beta : {0.3, 1.0, 5.0}) {
            const BoundCoefficients closed = spin_bath_coefficients_continuum(alpha, beta);
            const BoundCoefficients quad =
                spin_bath_coefficients_continuum_quadrature(alpha, beta);
            CHECK(closed.k == doctest::Approx(quad.k).epsilon(1e-8));
            CHECK(closed.m == doctest::Approx(quad.m).epsilon(1e-8));
            CHECK(closed.l == doctest::Approx(quad.l).epsilon(1e-8));
        }
    }
}

TEST_CASE("grid discretization converges to the continuum coefficients") {
    const double alpha = 1.0, beta = 1.0;
    const BoundCoefficients target = ohmic_coefficients(OhmicSpectralDensity(alpha), beta);
    double previous_error = 1e9;
    for (std::size_t modes : {200, 800, 3200}) {
        const DiscreteBath bath = discretize_ohmic(OhmicSpectralDensity(alpha), modes, 40.0);
        std::vector<Complex> g_complex(bath.g.begin(), bath.g.end());
        const BoundCoefficients discrete =
            discrete_bosonic_coefficients(bath.omega, g_complex, beta);
        const double error = std::max({std::abs(discrete.k - target.k) / target.k,
                                       std::abs(discrete.m - target.m) / target.m,
                                       std::abs(discrete.l - target.l) / target.l});
        CHECK(error < previous_error);
        previous_error = error;
    }
    CHECK(previous_error < 1e-5);
}

TEST_CASE("polarization coefficients") {
    CHECK(polarization_coefficient_sq(0.0) == doctest::Approx(0.0));
    CHECK(polarization_coefficient_sq(1.0) == doctest::Approx(0.25));
    double previous = -1.0;
    for (double p = 0.0; p <= 1.0; p += 0.05) {
        const double value = polarization_coefficient_sq(p);
        CHECK(value >= 0.0);
        CHECK(value <= 0.25);
        CHECK(value >= previous);
        previous = value;
    }
    CHECK(log_polarization_coefficient(0.0) == doctest::Approx(0.0));
    CHECK(log_polarization_coefficient(1.0 - 1e-9) > 10.0);
    CHECK_THROWS_AS((void)log_polarization_coefficient(1.0), std::invalid_argument);
}

TEST_CASE("pure polarization with n_x = 0 makes relaxed and exact coincide") {
    const BoundCoefficients c = ohmic_coefficients(OhmicSpectralDensity(1.0), 0.8);
    for (const auto& axis : {std::array<double, 3>{0.0, 0.0, 1.0},
                             std::array<double, 3>{0.0, 1.0, 0.0},
                             std::array<double, 3>{0.0, 0.6, 0.8}}) {
        const QubitBathBounds bounds =
            qubit_bath_bounds(1.0, 1.0, 0.8, BlochState(1.0, axis), c);
        CHECK(bounds.relaxed == doctest::Approx(bounds.exact).epsilon(1e-12));
        CHECK(!bounds.thermal_log.has_value());
    }
}

TEST_CASE("maximally mixed exact information vanishes with temperature") {
    const BlochState mixed(0.0, {0.0, 0.0, 1.0});
    double previous = 1e9;
    for (double beta : {1e-2, 5e-3, 2.5e-3}) {
        const BoundCoefficients c = ohmic_coefficients(OhmicSpectralDensity(2.0), beta);
        const QubitBathBounds bounds = qubit_bath_bounds(1.0, 0.5, beta, mixed, c);
        CHECK(bounds.exact < previous);
        previous = bounds.exact;
    }
    CHECK(previous < 1e-4);
}

TEST_CASE("closed-form panel values dominate the exact information") {
    Rng rng(63);
    for (int trial = 0; trial < 50; ++trial) {
        const double alpha = std::exp(rng.uniform(std::log(0.3), std::log(3.0)));
        const double beta = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
        const double p = rng.uniform(0.0, 1.0);
        const BlochState state(p, {rng.gaussian(), rng.gaussian(), rng.gaussian()});
        for (bool bosonic : {true, false}) {
            const BoundCoefficients c =
                bosonic ? ohmic_coefficients(OhmicSpectralDensity(alpha), beta)
                        : spin_bath_coefficients_continuum(alpha, beta);
            const QubitBathBounds bounds = qubit_bath_bounds(1.0, 1.0, beta, state, c);
            CHECK(bounds.relaxed >= bounds.exact - 1e-12);
            CHECK(bounds.thermal >= bounds.exact - 1e-12);
            if (bounds.thermal_log) CHECK(*bounds.thermal_log >= bounds.exact - 1e-12);
            CHECK(bounds.exact >= -1e-10);
        }
    }
}

TEST_CASE("coefficient formulas reproduce the matrix-level values on a spin bath") {
    // For the central-spin model every closed form except the log variant
    // equals its matrix-level counterpart exactly; the log variant stays an
    // upper bound on the exact information.
    Rng rng(64);
    const int bath_spins = 3;
    const BlochState polarization(0.6, {0.28, 0.41, std::sqrt(1 - 0.28 * 0.28 - 0.41 * 0.41)});
    const CentralSpinInstance instance =
        CentralSpinInstance::sample(bath_spins, 1.1, 0.9, 1.3, polarization, 77);
    const CentralSpinModel model = instance.build();
    const DensityMatrix system = bloch_state(polarization);
    const DensityMatrix bath = thermal_state(model.h_bath, instance.beta);
    const DriveSpec drive(model.h_system, model.h_interaction, {0.0});

    const BoundCoefficients c =
        spin_bath_coefficients(instance.omega, instance.g, instance.beta);
    const QubitBathBounds closed =
        qubit_bath_bounds(instance.delta, instance.gamma, instance.beta, polarization, c);

    CHECK(closed.relaxed ==
          doctest::Approx(relaxed_bound(drive, system, bath)).epsilon(1e-10));
    CHECK(closed.thermal ==
          doctest::Approx(thermal_bound(drive, system, bath, model.h_bath, instance.beta))
              .epsilon(1e-10));
    CHECK(closed.exact ==
          doctest::Approx(skew_information(system, bath, drive.total_at(0.0))).epsilon(1e-10));
    REQUIRE(closed.thermal_log.has_value());
    CHECK(*closed.thermal_log >= closed.exact - 1e-12);
}

TEST_CASE("Ohmic exact information is the limit of discretized baths") {
    const double delta = 1.0, gamma = 1.0, alpha = 1.0, beta = 1.0;
    const BlochState polarization(0.6, {0.0, 0.0, 1.0});
    const QubitBathBounds target = qubit_bath_bounds(
        delta, gamma, beta, polarization, ohmic_coefficients(OhmicSpectralDensity(alpha), beta));
    double previous_error = 1e9;
    for (std::size_t modes : {100, 400, 1600}) {
        const DiscreteBath bath = discretize_ohmic(OhmicSpectralDensity(alpha), modes, 40.0);
        std::vector<Complex> g_complex(bath.g.begin(), bath.g.end());
        const QubitBathBounds discrete =
            qubit_bath_bounds(delta, gamma, beta, polarization,
                              discrete_bosonic_coefficients(bath.omega, g_complex, beta));
        const double error = std::abs(discrete.exact - target.exact);
        CHECK(error < previous_error);
        previous_error = error;
    }
    CHECK(previous_error < 1e-4 * std::abs(target.exact));
}

TEST_SUITE_END();
