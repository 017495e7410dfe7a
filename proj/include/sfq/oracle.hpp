// oracle.hpp — Independent ground-truth checks: a closed-form two-level
// simulator and a brute-force search over small genome spaces.

#pragma once

#include <cstdint>

#include "sfq/fitness.hpp"

namespace sfq {

struct OracleReport {
    PulseSequence best_genome;
    FitnessScore best_score;
    std::uint64_t evaluated = 0;
};

// Lab-frame gate of a train on the two-level model, built purely from
// closed-form 2x2 rotation and phase matrices (no numerical exponentials).
// Requires model.dim == 2.
GateUnitary two_level_propagate(const PulseSequence& seq, const TransmonModel& model,
                                const DriveConfig& drive);

inline constexpr std::uint64_t kExhaustiveBound = 2'000'000;

// Scores every genome of the given length with the same scorer the search
// uses and returns the global optimum under the pair ordering. Enumeration is
// base-|alphabet| counting with symbol order (-1, 0, +1) and site 0 as the
// least significant digit; ties keep the lowest genome index.
OracleReport exhaustive_search(int length, const TransmonModel& model, const DriveConfig& drive,
                               const TargetGate& gate, Alphabet alphabet = Alphabet::bipolar,
                               int workers = 1);

// Genome at a given enumeration index.
PulseSequence genome_at_index(std::uint64_t index, int length, Alphabet alphabet);

}  // namespace sfq
