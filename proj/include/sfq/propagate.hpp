// propagate.hpp — Gate unitaries from pulse trains
//
// Timing convention: the kick fires at the start of a tick, then the system
// evolves freely for one full generator period. The lab-frame gate for a
// train s_0..s_{L-1} is therefore
//     U_lab = [F·K(s_{L-1})] ... [F·K(s_1)] [F·K(s_0)],   K(0) = I,
// and total_time = L·T_g. The rotating frame removes the bare qubit phases:
// U_g = exp(+i ω₀ t n̂) · U_lab at t = total_time.

#pragma once

#include <Eigen/Dense>

#include "sfq/model.hpp"
#include "sfq/sequence.hpp"

namespace sfq {

struct GateUnitary {
    Eigen::MatrixXcd matrix;
    double total_time = 0.0; // ns
};

// K(s) = exp(s (Δθ/2) (a† - a)); at dim = 2 this is the plane rotation
// [[cos(Δθ/2), -sin(Δθ/2)], [sin(Δθ/2), cos(Δθ/2)]]. Computed by Hermitian
// eigendecomposition of i(a† - a).
GateUnitary kick_unitary(const TransmonModel& model, int polarity);

// Diagonal free evolution exp(-i E_n dt). Requires dt > 0.
GateUnitary free_step(const TransmonModel& model, double dt);

// ‖U†U - I‖_max.
double unitarity_defect(const Eigen::MatrixXcd& u);

// Precomputes the three per-tick step matrices F·K(s) once so trains can be
// scored as a chain of dense multiplies. Immutable after construction; safe
// to share across concurrent scorers.
class Propagator {
public:
    Propagator(const TransmonModel& model, const DriveConfig& drive);

    // Lab-frame gate of a full train.
    GateUnitary propagate(const PulseSequence& seq) const;

    // Lab-frame propagation followed by the rotating-frame transform.
    GateUnitary propagate_rotating(const PulseSequence& seq) const;

    // In-place u <- exp(+i ω₀ t n̂) · u.
    void apply_frame(Eigen::MatrixXcd& u, double t) const;

    const TransmonModel& model() const { return model_; }
    const DriveConfig& drive() const { return drive_; }

private:
    TransmonModel model_;
    DriveConfig drive_;
    Eigen::MatrixXcd step_[3]; // F·K(s) for s = -1, 0, +1
};

// One-shot convenience wrappers over Propagator.
GateUnitary propagate(const PulseSequence& seq, const TransmonModel& model,
                      const DriveConfig& drive);

GateUnitary to_rotating_frame(const GateUnitary& u, const TransmonModel& model);

}  // namespace sfq
