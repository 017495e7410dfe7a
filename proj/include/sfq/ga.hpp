// ga.hpp — Genetic search over pulse trains
//
// One generation: score every unscored individual (parallel map), check the
// termination tolerances, then breed N-1 children through tournament
// selection, one-point crossover and single-site mutation, carry the current
// best into the spare slot, and finally replace the two worst of the new
// population with the two best of the previous one.
//
// Determinism: random draws come from counter-based substreams keyed by
// (rng_seed, generation, role); scoring consumes no randomness, so results
// are identical for any worker count.

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sfq/fitness.hpp"
#include "sfq/rng.hpp"

namespace sfq {

enum class SearchMode { sequence, subsequence };

const char* to_string(SearchMode m);
SearchMode search_mode_from_string(std::string_view name);

struct GaConfig {
    int sequence_length = 114;     // L; the subsequence length in subsequence mode
    SearchMode mode = SearchMode::sequence;
    Alphabet alphabet = Alphabet::bipolar;
    int max_rep = 35;              // subsequence mode: repetitions scanned per genome
    double max_duration_ns = 0.0;  // > 0 caps repetitions so L·r·T_g stays below it
    double crossover_prob = 0.8;   // P_c
    double mutation_prob = 0.8;    // P_m
    int population_size = 0;       // 0 -> 2L + 1
    int max_iterations = 500;
    double angle_tol = 1e-5;       // rad, termination
    double infid_tol = 1e-4;       // termination
    double compare_threshold = kCompareAngleThreshold;
    std::uint64_t rng_seed = 1;
    int workers = 1;               // scoring parallelism; capped by SFQ_EVOLVE_THREADS

    int effective_population() const {
        return population_size > 0 ? population_size : 2 * sequence_length + 1;
    }

    void validate() const;
};

struct Individual {
    PulseSequence genome;
    std::optional<FitnessScore> score;
    int best_rep = 1; // subsequence mode
};

struct GaResult {
    Individual best;
    int generations_run = 0;        // scored generations
    bool terminated_early = false;  // tolerances met before the iteration cap
    bool canceled = false;
    std::vector<FitnessScore> history; // best-so-far score per scored generation
    double wall_time = 0.0;            // seconds, the evolve call only
};

struct EvolveHooks {
    // Called once per scored generation with (generation index, best score).
    std::function<void(int, const FitnessScore&)> on_generation;
    // Checked at generation boundaries; set to stop the run.
    const std::atomic<bool>* cancel = nullptr;
};

// Thresholded comb seed: symbol_k = sign(sin(ω₀ k T_g)) where |sin| exceeds
// the threshold fraction, else 0. The unipolar alphabet keeps only the
// positive half-wave.
PulseSequence harmonic_seed(const TransmonModel& model, const DriveConfig& drive, int length,
                            double threshold_fraction, Alphabet alphabet = Alphabet::bipolar);

struct SeedChoice {
    PulseSequence sequence;
    double threshold_fraction = 0.0;
};

// Bisects the threshold fraction toward an even zero/non-zero split.
SeedChoice balanced_seed(const TransmonModel& model, const DriveConfig& drive, int length,
                         Alphabet alphabet = Alphabet::bipolar);

// Seed plus its single-site variants (each site replaced by each alternative
// symbol). When the alphabet yields fewer variants than N-1, the population is
// padded with random single-site flips of already-present genomes.
std::vector<Individual> init_population(const PulseSequence& seed, const GaConfig& config,
                                        CounterRng& rng);

// Draws 3 distinct individuals uniformly; the two best become parents
// (best first; ties keep the lower population index).
std::pair<std::size_t, std::size_t> select_parents(const std::vector<Individual>& population,
                                                   CounterRng& rng, double compare_threshold);

// Tails swapped after a crossover point in 1..L-1.
std::pair<PulseSequence, PulseSequence> crossover_at(const PulseSequence& p1,
                                                     const PulseSequence& p2, int point);
std::pair<PulseSequence, PulseSequence> crossover(const PulseSequence& p1,
                                                  const PulseSequence& p2, double crossover_prob,
                                                  CounterRng& rng);

// With probability P_m, one uniformly chosen site is set to one of its
// alternative symbols (uniform among alternatives).
PulseSequence mutate(const PulseSequence& genome, double mutation_prob, CounterRng& rng);

GaResult evolve(const GaConfig& config, const TransmonModel& model, const DriveConfig& drive,
                const TargetGate& gate, const EvolveHooks& hooks = {});

}  // namespace sfq
