// sweep.hpp — Batch searches over frequency grids and CSV reporting

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sfq/ga.hpp"

namespace sfq {

// One result row. The leading columns follow the report-table layout:
// sequence mode — index, delta_theta, f0, sequence length, duration, angle
// error, infidelity, wall time (8 columns); subsequence mode inserts the
// subsequence length and repetition count after f0 (10 columns). The seed,
// genome text and satisfied flag ride along for reproducibility.
struct RunRecord {
    int index = 0;
    double delta_theta = 0.0;    // rad
    double f0_ghz = 0.0;
    int subsequence_length = 0;  // subsequence mode only
    int repetitions = 1;         // subsequence mode only
    int sequence_length = 0;     // full train length
    double duration_ns = 0.0;    // sequence_length * T_g
    double angle_error = 0.0;    // rad
    double infidelity = 0.0;
    double wall_time = 0.0;      // seconds, evolve call only
    std::uint64_t rng_seed = 0;
    std::string genome;          // searched genome in '+', '-', '0' form
    bool satisfied = false;      // both tolerances met

    bool operator==(const RunRecord&) const = default;
};

struct SweepConfig {
    std::vector<double> frequencies_ghz; // empty list is allowed: header-only CSV
    double fg_ghz = 25.0;
    double delta_theta = 0.032; // rad
    double alpha_ghz = 0.25;
    int dim = 5;
    double theta_target = std::numbers::pi / 2.0;

    SearchMode mode = SearchMode::sequence;
    Alphabet alphabet = Alphabet::bipolar;
    int length_min = 96;
    int length_max = 120;
    int max_rep = 35;
    double max_duration_ns = 0.0;
    int seeds_per_point = 1;
    std::uint64_t base_seed = 1;
    int workers = 1; // independent evolve instances run in parallel

    int max_iterations = 500;
    double crossover_prob = 0.8;
    double mutation_prob = 0.8;
    double angle_tol = 1e-5;
    double infid_tol = 1e-4;
    double compare_threshold = kCompareAngleThreshold;
    int population_size = 0;

    void validate() const;
};

// The default 21-point qubit-frequency grid (GHz) driven at 25 GHz.
const std::vector<double>& default_frequency_grid();

TransmonModel model_for(const SweepConfig& config, double f0_ghz);
DriveConfig drive_for(const SweepConfig& config);
GaConfig ga_for(const SweepConfig& config, int length, std::uint64_t rng_seed);

// Deterministic per-task seed derived from (base_seed, frequency index, length, attempt).
std::uint64_t task_seed(std::uint64_t base_seed, int freq_index, int length, int attempt);

struct SweepResult {
    std::vector<RunRecord> records; // one per frequency, input order
    bool all_satisfied = true;
};

struct SweepHooks {
    // Called after every finished evolve task (under a lock).
    std::function<void(const RunRecord&)> on_task;
    const std::atomic<bool>* cancel = nullptr;
};

// Runs the grid. Sequence mode evaluates every length in the range and keeps,
// per frequency, the lowest-infidelity record among angle-satisfying lengths
// (falling back to the overall pair-ordering best when none satisfies).
// Subsequence mode scans lengths in ascending order and keeps the first
// (shortest) satisfying record. When out_dir is given, writes results.csv and
// seq_<N>.txt files atomically.
SweepResult run_sweep(const SweepConfig& config,
                      const std::optional<std::filesystem::path>& out_dir = std::nullopt,
                      const SweepHooks& hooks = {});

std::string records_to_csv(const std::vector<RunRecord>& records, SearchMode mode);
std::vector<RunRecord> records_from_csv(const std::string& text);
SearchMode csv_mode(const std::string& text);

// Writes via a temp file plus rename so readers never observe partial output.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace sfq
