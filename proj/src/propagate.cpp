#include "sfq/propagate.hpp"

#include <cmath>
#include <complex>

namespace sfq {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

GateUnitary kick_unitary(const TransmonModel& model, int polarity) {
    model.validate();
    if (polarity != 1 && polarity != -1) {
        throw ParameterError("kick polarity must be +1 or -1");
    }
    const LadderOps ops = ladder_matrices(model.dim);
    // a† - a = -i B with B Hermitian, so exp(s (Δθ/2)(a† - a)) = V exp(-i s (Δθ/2) λ) V†.
    const Eigen::MatrixXcd hermitian = kI * ops.kick_generator;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hermitian);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("kick generator eigendecomposition failed");
    }
    Eigen::VectorXcd phases(model.dim);
    for (int n = 0; n < model.dim; ++n) {
        phases(n) = std::exp(-kI * (double(polarity) * 0.5 * model.delta_theta *
                                    eig.eigenvalues()(n)));
    }
    GateUnitary out;
    out.matrix = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
    out.total_time = 0.0;
    return out;
}

GateUnitary free_step(const TransmonModel& model, double dt) {
    if (!(dt > 0.0)) throw ParameterError("free evolution time must be positive");
    const Eigen::VectorXd energies = free_hamiltonian(model);
    GateUnitary out;
    out.matrix = Eigen::MatrixXcd::Zero(model.dim, model.dim);
    for (int n = 0; n < model.dim; ++n) {
        out.matrix(n, n) = std::exp(-kI * (energies(n) * dt));
    }
    out.total_time = dt;
    return out;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    const Eigen::MatrixXcd identity =
        Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return (gram - identity).cwiseAbs().maxCoeff();
}

Propagator::Propagator(const TransmonModel& model, const DriveConfig& drive)
    : model_(model), drive_(drive) {
    model_.validate();
    drive_.validate(model_);
    const GateUnitary free_tick = free_step(model_, drive_.tick);
    step_[0] = free_tick.matrix * kick_unitary(model_, -1).matrix;
    step_[1] = free_tick.matrix;
    step_[2] = free_tick.matrix * kick_unitary(model_, +1).matrix;
}

GateUnitary Propagator::propagate(const PulseSequence& seq) const {
    const int d = model_.dim;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd tmp(d, d);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const int s = seq[k];
        if (s < -1 || s > 1) {
            throw SequenceError("symbol outside alphabet: " + std::to_string(s));
        }
        tmp.noalias() = step_[s + 1] * u;
        u.swap(tmp);
    }
    GateUnitary out;
    out.matrix = std::move(u);
    out.total_time = double(seq.size()) * drive_.tick;
    return out;
}

GateUnitary Propagator::propagate_rotating(const PulseSequence& seq) const {
    GateUnitary u = propagate(seq);
    apply_frame(u.matrix, u.total_time);
    return u;
}

void Propagator::apply_frame(Eigen::MatrixXcd& u, double t) const {
    for (int n = 0; n < model_.dim; ++n) {
        u.row(n) *= std::exp(kI * (model_.omega0 * t * double(n)));
    }
}

GateUnitary propagate(const PulseSequence& seq, const TransmonModel& model,
                      const DriveConfig& drive) {
    return Propagator(model, drive).propagate(seq);
}

GateUnitary to_rotating_frame(const GateUnitary& u, const TransmonModel& model) {
    GateUnitary out = u;
    for (int n = 0; n < model.dim; ++n) {
        out.matrix.row(n) *= std::exp(kI * (model.omega0 * u.total_time * double(n)));
    }
    return out;
}

}  // namespace sfq
