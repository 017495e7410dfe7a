#include "sfq/fitness.hpp"

#include <algorithm>
#include <cmath>

namespace sfq {

namespace {

std::strong_ordering order_doubles(double x, double y) {
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Eigen::Matrix2cd ideal_block(double theta) {
    // exp(i θ σ_y / 2) = [[cos(θ/2), sin(θ/2)], [-sin(θ/2), cos(θ/2)]]
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    Eigen::Matrix2cd block;
    block << c, s, -s, c;
    return block;
}

// Mean of |<α|W|α>|² over the six cardinal states, from the computational
// 2x2 block of W = U_g† U_id.
double cardinal_mean(const Eigen::Matrix2cd& w) {
    using cd = std::complex<double>;
    const cd w00 = w(0, 0), w01 = w(0, 1), w10 = w(1, 0), w11 = w(1, 1);
    const cd diag = w00 + w11;
    const cd z_plus = w00;                                    // |0>
    const cd z_minus = w11;                                   // |1>
    const cd x_plus = 0.5 * (diag + w01 + w10);               // (|0>+|1>)/√2
    const cd x_minus = 0.5 * (diag - w01 - w10);              // (|0>-|1>)/√2
    const cd y_plus = 0.5 * (diag + cd(0, 1) * (w01 - w10));  // (|0>+i|1>)/√2
    const cd y_minus = 0.5 * (diag - cd(0, 1) * (w01 - w10)); // (|0>-i|1>)/√2
    return (std::norm(x_plus) + std::norm(x_minus) + std::norm(y_plus) + std::norm(y_minus) +
            std::norm(z_plus) + std::norm(z_minus)) /
           6.0;
}

void check_square(const Eigen::MatrixXcd& u) {
    if (u.rows() < 2 || u.rows() != u.cols()) {
        throw ParameterError("gate unitary must be square with dimension >= 2");
    }
}

}  // namespace

void TargetGate::validate() const {
    if (!(theta > 0.0) || !(theta <= std::numbers::pi)) {
        throw ParameterError("target rotation angle must lie in (0, pi]");
    }
}

std::strong_ordering compare(const FitnessScore& a, const FitnessScore& b,
                             double angle_threshold) {
    const bool both_below = a.angle_error < angle_threshold && b.angle_error < angle_threshold;
    if (both_below) {
        if (auto c = order_doubles(a.infidelity, b.infidelity); c != 0) return c;
        return order_doubles(a.angle_error, b.angle_error);
    }
    if (auto c = order_doubles(a.angle_error, b.angle_error); c != 0) return c;
    return order_doubles(a.infidelity, b.infidelity);
}

double extract_angle(const Eigen::MatrixXcd& framed) {
    check_square(framed);
    const double overlap = std::abs(framed(1, 0));
    return 2.0 * std::asin(std::clamp(overlap, 0.0, 1.0));
}

double extract_angle(const GateUnitary& u) { return extract_angle(u.matrix); }

Eigen::MatrixXcd ideal_gate_matrix(const TargetGate& gate, int dim) {
    gate.validate();
    if (dim < 2) throw ParameterError("ideal gate needs dimension >= 2");
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    u.topLeftCorner<2, 2>() = ideal_block(gate.theta);
    return u;
}

double average_fidelity(const Eigen::MatrixXcd& u, const TargetGate& gate) {
    gate.validate();
    check_square(u);
    // U_id is block diagonal, so W = U_g† U_id restricted to the computational
    // block only involves the computational block of U_g.
    const Eigen::Matrix2cd w = u.topLeftCorner<2, 2>().adjoint() * ideal_block(gate.theta);
    return std::clamp(cardinal_mean(w), 0.0, 1.0);
}

double average_fidelity(const GateUnitary& u, const TargetGate& gate) {
    return average_fidelity(u.matrix, gate);
}

FitnessScore score_framed_gate(const Eigen::MatrixXcd& framed, const TargetGate& gate) {
    FitnessScore score;
    score.angle_error = std::abs(extract_angle(framed) - gate.theta);
    score.infidelity = std::max(0.0, 1.0 - average_fidelity(framed, gate));
    return score;
}

Scorer::Scorer(const TransmonModel& model, const DriveConfig& drive, const TargetGate& gate,
               double compare_threshold)
    : propagator_(model, drive), gate_(gate), compare_threshold_(compare_threshold) {
    gate_.validate();
}

FitnessScore Scorer::score_sequence(const PulseSequence& seq) const {
    const GateUnitary framed = propagator_.propagate_rotating(seq);
    return score_framed_gate(framed.matrix, gate_);
}

SubsequenceScore Scorer::score_subsequence(const PulseSequence& sub, int max_rep) const {
    if (max_rep < 1 || max_rep > kMaxRepBound) {
        throw ParameterError("repetition bound must lie in [1, " +
                             std::to_string(kMaxRepBound) + "], got " + std::to_string(max_rep));
    }
    const GateUnitary base = propagator_.propagate(sub);
    const double sub_time = base.total_time;
    const int d = propagator_.model().dim;

    Eigen::MatrixXcd power = base.matrix;
    Eigen::MatrixXcd framed(d, d);
    Eigen::MatrixXcd tmp(d, d);
    SubsequenceScore best;
    for (int rep = 1; rep <= max_rep; ++rep) {
        framed = power;
        propagator_.apply_frame(framed, double(rep) * sub_time);
        const FitnessScore score = score_framed_gate(framed, gate_);
        if (rep == 1 || better(score, best.score, compare_threshold_)) {
            best.best_rep = rep;
            best.score = score;
        }
        if (rep < max_rep) {
            tmp.noalias() = base.matrix * power;
            power.swap(tmp);
        }
    }
    return best;
}

FitnessScore score_sequence(const PulseSequence& seq, const TransmonModel& model,
                            const DriveConfig& drive, const TargetGate& gate) {
    return Scorer(model, drive, gate).score_sequence(seq);
}

SubsequenceScore score_subsequence(const PulseSequence& sub, int max_rep,
                                   const TransmonModel& model, const DriveConfig& drive,
                                   const TargetGate& gate) {
    return Scorer(model, drive, gate).score_subsequence(sub, max_rep);
}

}  // namespace sfq
