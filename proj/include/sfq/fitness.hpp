// fitness.hpp — Rotation-angle and six-state average-fidelity scoring
//
// A train is scored by the pair (rotation-angle error, infidelity). The pair
// ordering is thresholded lexicographic: angle error decides, except when both
// candidates are already below the angle threshold, where infidelity decides.

#pragma once

#include <Eigen/Dense>
#include <compare>

#include "sfq/propagate.hpp"

namespace sfq {

struct TargetGate {
    double theta = std::numbers::pi / 2.0; // target rotation angle about y, rad

    void validate() const;
};

struct FitnessScore {
    double angle_error = 0.0; // |θ̂ - θ_target|, rad
    double infidelity = 0.0;  // 1 - <F>

    bool operator==(const FitnessScore&) const = default;
};

inline constexpr double kCompareAngleThreshold = 1e-4; // rad

// Total order: below-threshold pairs compare by (infidelity, angle_error),
// everything else by (angle_error, infidelity). A below-threshold score always
// precedes an above-threshold one because its angle error is smaller.
std::strong_ordering compare(const FitnessScore& a, const FitnessScore& b,
                             double angle_threshold = kCompareAngleThreshold);

inline bool better(const FitnessScore& a, const FitnessScore& b,
                   double angle_threshold = kCompareAngleThreshold) {
    return compare(a, b, angle_threshold) < 0;
}

// θ̂ = 2 asin(clamp(|<1|u|0>|, 0, 1)) ∈ [0, π]. Expects u in the rotating frame.
double extract_angle(const Eigen::MatrixXcd& framed);
double extract_angle(const GateUnitary& u);

// U_id = exp(i θ σ_y / 2) embedded in the top-left 2x2 block, identity elsewhere.
Eigen::MatrixXcd ideal_gate_matrix(const TargetGate& gate, int dim);

// <F> = (1/6) Σ |<α| U_g† U_id |α>|² over the six Bloch-sphere cardinal states.
// Only the computational block of u contributes; leakage strictly lowers F.
double average_fidelity(const Eigen::MatrixXcd& u, const TargetGate& gate);
double average_fidelity(const GateUnitary& u, const TargetGate& gate);

// Score of a framed gate against a target: (|θ̂ - θ|, 1 - <F>).
FitnessScore score_framed_gate(const Eigen::MatrixXcd& framed, const TargetGate& gate);

struct SubsequenceScore {
    int best_rep = 1;
    FitnessScore score;
};

// Bundles a Propagator with a target so populations can be scored repeatedly.
// Pure and reentrant: scoring performs the same arithmetic in the same order
// for a given genome no matter which thread runs it.
class Scorer {
public:
    Scorer(const TransmonModel& model, const DriveConfig& drive, const TargetGate& gate,
           double compare_threshold = kCompareAngleThreshold);

    FitnessScore score_sequence(const PulseSequence& seq) const;

    // Propagates the subsequence once, then scores its matrix powers
    // r = 1..max_rep (each framed at t = r·|sub|·T_g) and returns the best r
    // under the pair ordering; ties keep the smallest r.
    SubsequenceScore score_subsequence(const PulseSequence& sub, int max_rep) const;

    const Propagator& propagator() const { return propagator_; }
    const TargetGate& gate() const { return gate_; }
    double compare_threshold() const { return compare_threshold_; }

    static constexpr int kMaxRepBound = 64;

private:
    Propagator propagator_;
    TargetGate gate_;
    double compare_threshold_;
};

// One-shot wrappers.
FitnessScore score_sequence(const PulseSequence& seq, const TransmonModel& model,
                            const DriveConfig& drive, const TargetGate& gate);
SubsequenceScore score_subsequence(const PulseSequence& sub, int max_rep,
                                   const TransmonModel& model, const DriveConfig& drive,
                                   const TargetGate& gate);

}  // namespace sfq
