// model.hpp — Truncated anharmonic-oscillator qubit model and operator matrices
//
// Unit conventions (ħ = 1 throughout):
//   * every frequency/energy is stored as angular rad/ns,
//   * user-facing I/O is ordinary frequency in GHz and time in ns,
//   * the conversion is exactly a factor 2π at that boundary (rad/ns / 2π = GHz).

#pragma once

#include <Eigen/Dense>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sfq/errors.hpp"

namespace sfq {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Magnetic flux quantum, Wb. Only used by the capacitance-based kick-angle formula.
inline constexpr double kFluxQuantum = 2.067833848e-15;

// Raw circuit energies. Both in angular rad/ns; capacitances in farads.
struct CircuitParams {
    double josephson_energy = 0.0;              // E_J
    double charging_energy = 0.0;               // E_C
    std::optional<double> coupling_capacitance; // C_c
    std::optional<double> qubit_capacitance;    // C_q

    // Throws ParameterError on hard violations (non-positive energies,
    // E_J/E_C <= 1); returns warnings for soft ones (ratio below 20).
    std::vector<std::string> validate() const;
};

struct TransmonModel {
    double omega0 = 0.0;      // qubit angular frequency, rad/ns
    double alpha = 0.0;       // anharmonicity, rad/ns
    double delta_theta = 0.0; // per-pulse kick angle, rad (0 means "not yet set")
    int dim = 5;              // Hilbert-space truncation dimension

    static constexpr int kMinDim = 2;
    static constexpr int kMaxDim = 16;

    double f0_ghz() const { return omega0 / kTwoPi; }
    double alpha_ghz() const { return alpha / kTwoPi; }

    static TransmonModel from_frequencies(double f0_ghz, double alpha_ghz, double delta_theta,
                                          int dim);

    void validate() const;
};

struct DriveConfig {
    double omega_g = 0.0; // generator angular frequency, rad/ns
    double tick = 0.0;    // generator period T_g = 2π/ω_g, ns

    double fg_ghz() const { return omega_g / kTwoPi; }

    static DriveConfig from_frequency_ghz(double fg_ghz);

    // Hard check: tick * omega_g == 2π to 1e-12. Soft: omega_g > 2*omega0.
    std::vector<std::string> validate(const TransmonModel& model) const;
};

// Build a model from circuit energies: omega0 = sqrt(8 E_J E_C), alpha = E_C/12.
// delta_theta comes from C_c Φ₀ sqrt(omega0 / 2 C_q) when both capacitances are
// present; otherwise it is left unset for the caller to supply.
TransmonModel derive_model(const CircuitParams& circuit, int dim,
                           std::vector<std::string>* warnings = nullptr);

struct LadderOps {
    Eigen::MatrixXcd lowering;       // a
    Eigen::MatrixXcd raising;        // a†
    Eigen::MatrixXcd kick_generator; // a† - a (anti-Hermitian)
};

// a[n-1, n] = sqrt(n) for n = 1..dim-1.
LadderOps ladder_matrices(int dim);

// Diagonal energies E_n = omega0*n - (alpha/2)*n*(n-1).
Eigen::VectorXd free_hamiltonian(const TransmonModel& model);

}  // namespace sfq
