#include "sfq/model.hpp"

#include <cmath>

namespace sfq {

std::vector<std::string> CircuitParams::validate() const {
    if (!(josephson_energy > 0.0) || !(charging_energy > 0.0)) {
        throw ParameterError("circuit energies must be positive");
    }
    const double ratio = josephson_energy / charging_energy;
    if (ratio <= 1.0) {
        throw ParameterError("E_J/E_C = " + std::to_string(ratio) +
                             " is outside the weakly anharmonic regime (need > 1)");
    }
    std::vector<std::string> warnings;
    if (ratio < 20.0) {
        warnings.push_back("E_J/E_C = " + std::to_string(ratio) +
                           " is below 20; charge dispersion may not be negligible");
    }
    if ((coupling_capacitance && *coupling_capacitance <= 0.0) ||
        (qubit_capacitance && *qubit_capacitance <= 0.0)) {
        throw ParameterError("capacitances must be positive when given");
    }
    return warnings;
}

TransmonModel TransmonModel::from_frequencies(double f0_ghz, double alpha_ghz, double delta_theta,
                                              int dim) {
    TransmonModel m;
    m.omega0 = kTwoPi * f0_ghz;
    m.alpha = kTwoPi * alpha_ghz;
    m.delta_theta = delta_theta;
    m.dim = dim;
    m.validate();
    return m;
}

void TransmonModel::validate() const {
    if (!(omega0 > 0.0)) throw ParameterError("qubit frequency must be positive");
    if (alpha < 0.0) throw ParameterError("anharmonicity must be non-negative");
    if (!(delta_theta > 0.0) || !(delta_theta < std::numbers::pi / 4.0)) {
        throw ParameterError("kick angle must lie in (0, pi/4), got " +
                             std::to_string(delta_theta));
    }
    if (dim < kMinDim || dim > kMaxDim) {
        throw ParameterError("truncation dimension must lie in [2, 16], got " +
                             std::to_string(dim));
    }
}

DriveConfig DriveConfig::from_frequency_ghz(double fg_ghz) {
    if (!(fg_ghz > 0.0)) throw ParameterError("generator frequency must be positive");
    DriveConfig d;
    d.omega_g = kTwoPi * fg_ghz;
    d.tick = kTwoPi / d.omega_g;
    return d;
}

std::vector<std::string> DriveConfig::validate(const TransmonModel& model) const {
    if (!(omega_g > 0.0) || !(tick > 0.0)) {
        throw ParameterError("generator frequency and period must be positive");
    }
    if (std::abs(tick * omega_g - kTwoPi) > 1e-12) {
        throw ParameterError("generator period is inconsistent with its frequency");
    }
    std::vector<std::string> warnings;
    if (!(omega_g > 2.0 * model.omega0)) {
        warnings.push_back("generator runs slower than two ticks per qubit period");
    }
    return warnings;
}

TransmonModel derive_model(const CircuitParams& circuit, int dim,
                           std::vector<std::string>* warnings) {
    auto circuit_warnings = circuit.validate();
    TransmonModel m;
    m.omega0 = std::sqrt(8.0 * circuit.josephson_energy * circuit.charging_energy);
    m.alpha = circuit.charging_energy / 12.0;
    m.dim = dim;
    if (circuit.coupling_capacitance && circuit.qubit_capacitance) {
        // omega0 converted to rad/s so the capacitance formula is evaluated in SI.
        const double omega0_si = m.omega0 * 1e9;
        m.delta_theta = *circuit.coupling_capacitance * kFluxQuantum *
                        std::sqrt(omega0_si / (2.0 * *circuit.qubit_capacitance));
    }
    if (dim < TransmonModel::kMinDim || dim > TransmonModel::kMaxDim) {
        throw ParameterError("truncation dimension must lie in [2, 16], got " +
                             std::to_string(dim));
    }
    if (warnings) {
        warnings->insert(warnings->end(), circuit_warnings.begin(), circuit_warnings.end());
    }
    return m;
}

LadderOps ladder_matrices(int dim) {
    if (dim < 2) throw ParameterError("ladder operators need dimension >= 2");
    LadderOps ops;
    ops.lowering = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        ops.lowering(n - 1, n) = std::sqrt(double(n));
    }
    ops.raising = ops.lowering.adjoint();
    ops.kick_generator = ops.raising - ops.lowering;
    return ops;
}

Eigen::VectorXd free_hamiltonian(const TransmonModel& model) {
    model.validate();
    Eigen::VectorXd energies(model.dim);
    for (int n = 0; n < model.dim; ++n) {
        energies(n) = model.omega0 * n - 0.5 * model.alpha * n * (n - 1);
    }
    return energies;
}

}  // namespace sfq
