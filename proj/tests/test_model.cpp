#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "sfq/model.hpp"

using namespace sfq;

TEST_SUITE_BEGIN("model");

TEST_CASE("derive_model applies the closed-form parameter relations") {
    // omega0 = sqrt(8 * 50) * E_C = 20 E_C when E_J = 50 E_C.
    CircuitParams circuit;
    circuit.charging_energy = 0.012;
    circuit.josephson_energy = 50.0 * circuit.charging_energy;
    const TransmonModel m = derive_model(circuit, 5);
    CHECK(m.omega0 == doctest::Approx(20.0 * 0.012).epsilon(1e-14));
    CHECK(m.alpha == doctest::Approx(0.001).epsilon(1e-14));
}

TEST_CASE("derive_model round-trips a target qubit frequency") {
    // Solve E_C from omega0 = 20 E_C at fixed ratio 50, then re-derive.
    const double f0_target = 4.54643; // GHz
    const double omega0 = kTwoPi * f0_target;
    CircuitParams circuit;
    circuit.charging_energy = omega0 / 20.0;
    circuit.josephson_energy = 50.0 * circuit.charging_energy;
    const TransmonModel m = derive_model(circuit, 5);
    CHECK(std::abs(m.f0_ghz() - f0_target) < 1e-9);
    CHECK(std::abs(m.omega0 - omega0) / omega0 < 1e-12);
    CHECK(std::abs(m.alpha - circuit.charging_energy / 12.0) / m.alpha < 1e-12);
}

TEST_CASE("derive_model computes the kick angle only when capacitances are present") {
    CircuitParams circuit;
    circuit.charging_energy = 0.012;
    circuit.josephson_energy = 50.0 * circuit.charging_energy;
    CHECK(derive_model(circuit, 5).delta_theta == 0.0);

    circuit.coupling_capacitance = 1e-15;
    circuit.qubit_capacitance = 8e-14;
    const TransmonModel m = derive_model(circuit, 5);
    const double expected = 1e-15 * kFluxQuantum * std::sqrt(m.omega0 * 1e9 / (2.0 * 8e-14));
    CHECK(m.delta_theta == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("circuit parameters reject bad energies and warn below the transmon regime") {
    CircuitParams circuit;
    circuit.josephson_energy = -1.0;
    circuit.charging_energy = 0.01;
    CHECK_THROWS_AS((void)derive_model(circuit, 5), ParameterError);

    circuit.josephson_energy = 0.009; // ratio 0.9 <= 1
    CHECK_THROWS_AS((void)circuit.validate(), ParameterError);

    circuit.josephson_energy = 0.1; // ratio 10: legal but warned
    std::vector<std::string> warnings;
    (void)derive_model(circuit, 5, &warnings);
    CHECK(warnings.size() == 1);

    circuit.josephson_energy = 0.5; // ratio 50: quiet
    warnings.clear();
    (void)derive_model(circuit, 5, &warnings);
    CHECK(warnings.empty());
}

TEST_CASE("model invariants") {
    CHECK_THROWS_AS(TransmonModel::from_frequencies(-5.0, 0.25, 0.032, 5), ParameterError);
    CHECK_THROWS_AS(TransmonModel::from_frequencies(5.0, -0.1, 0.032, 5), ParameterError);
    CHECK_THROWS_AS(TransmonModel::from_frequencies(5.0, 0.25, 0.0, 5), ParameterError);
    CHECK_THROWS_AS(TransmonModel::from_frequencies(5.0, 0.25, 1.0, 5), ParameterError);
    CHECK_THROWS_AS(TransmonModel::from_frequencies(5.0, 0.25, 0.032, 1), ParameterError);
    CHECK_THROWS_AS(TransmonModel::from_frequencies(5.0, 0.25, 0.032, 17), ParameterError);
    CHECK(TransmonModel::from_frequencies(5.0, 0.0, 0.032, 2).alpha == 0.0);
}

TEST_CASE("ladder matrices match the definition") {
    const LadderOps two = ladder_matrices(2);
    CHECK(two.lowering(0, 1) == std::complex<double>(1.0, 0.0));
    CHECK(two.lowering(0, 0) == std::complex<double>(0.0, 0.0));
    CHECK(two.lowering(1, 0) == std::complex<double>(0.0, 0.0));
    CHECK(two.lowering(1, 1) == std::complex<double>(0.0, 0.0));

    const LadderOps three = ladder_matrices(3);
    CHECK(three.lowering(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    CHECK_THROWS_AS(ladder_matrices(1), ParameterError);
}

TEST_CASE("kick generator is anti-Hermitian entrywise") {
    const LadderOps ops = ladder_matrices(5);
    const Eigen::MatrixXcd neg_adjoint = -ops.kick_generator.adjoint();
    // Entries are exact negations of real square roots: 0 ulp.
    CHECK((ops.kick_generator - neg_adjoint).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("truncated commutator equals diag(1, ..., 1, 1-d)") {
    for (int dim : {2, 3, 5, 8}) {
        const LadderOps ops = ladder_matrices(dim);
        const Eigen::MatrixXcd commutator =
            ops.lowering * ops.raising - ops.raising * ops.lowering;
        for (int i = 0; i < dim; ++i) {
            const double expected = i + 1 == dim ? 1.0 - dim : 1.0;
            CHECK(std::abs(commutator(i, i).real() - expected) < 1e-12);
        }
        Eigen::MatrixXcd off = commutator;
        off.diagonal().setZero();
        CHECK(off.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("free hamiltonian energies") {
    const TransmonModel m = testing::default_model();
    const Eigen::VectorXd energies = free_hamiltonian(m);
    CHECK(energies(0) == 0.0);
    CHECK(energies(1) == doctest::Approx(m.omega0).epsilon(1e-15));
    // f0 = 5 GHz, alpha/2pi = 0.25 GHz: E_2 / 2pi = 2*5 - 0.25 = 9.75 GHz.
    CHECK(energies(2) / kTwoPi == doctest::Approx(9.75).epsilon(1e-14));
    // Monotone while alpha*(n-1) < omega0.
    for (int n = 1; n < m.dim; ++n) CHECK(energies(n) > energies(n - 1));
}

TEST_CASE("drive config ties period to frequency") {
    const DriveConfig drive = testing::default_drive();
    CHECK(std::abs(drive.tick * drive.omega_g - kTwoPi) < 1e-12);
    CHECK(drive.tick == doctest::Approx(0.04).epsilon(1e-14));
    CHECK(drive.fg_ghz() == doctest::Approx(25.0).epsilon(1e-14));

    const TransmonModel m = testing::default_model();
    CHECK(drive.validate(m).empty());

    // Slower than two ticks per qubit period: warned, not rejected.
    const DriveConfig slow = DriveConfig::from_frequency_ghz(9.0);
    CHECK(slow.validate(m).size() == 1);

    DriveConfig broken = drive;
    broken.tick *= 1.001;
    CHECK_THROWS_AS((void)broken.validate(m), ParameterError);
}

TEST_SUITE_END();
