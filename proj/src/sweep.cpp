#include "sfq/sweep.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "sfq/parallel.hpp"

namespace sfq {

namespace {

const char* kSequenceHeader =
    "index,delta_theta_rad,f0_ghz,sequence_length,duration_ns,angle_error_rad,infidelity,"
    "wall_time_s,rng_seed,genome,satisfied";
const char* kSubsequenceHeader =
    "index,delta_theta_rad,f0_ghz,subsequence_length,repetitions,sequence_length,duration_ns,"
    "angle_error_rad,infidelity,wall_time_s,rng_seed,genome,satisfied";

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t next = line.find(sep, pos);
        if (next == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return fields;
}

double parse_double(const std::string& field) {
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size()) throw std::runtime_error("bad numeric field: " + field);
    return value;
}

// A record produced by one evolve task, before per-frequency reduction.
struct TaskOutcome {
    RunRecord record;
    bool valid = false;
};

RunRecord make_record(const SweepConfig& config, int freq_index, int length,
                      std::uint64_t rng_seed, const GaResult& ga) {
    const DriveConfig drive = drive_for(config);
    RunRecord rec;
    rec.index = freq_index + 1;
    rec.delta_theta = config.delta_theta;
    rec.f0_ghz = config.frequencies_ghz[static_cast<std::size_t>(freq_index)];
    if (config.mode == SearchMode::subsequence) {
        rec.subsequence_length = length;
        rec.repetitions = ga.best.best_rep;
        rec.sequence_length = length * ga.best.best_rep;
    } else {
        rec.sequence_length = length;
    }
    rec.duration_ns = double(rec.sequence_length) * drive.tick;
    rec.angle_error = ga.best.score->angle_error;
    rec.infidelity = ga.best.score->infidelity;
    rec.wall_time = ga.wall_time;
    rec.rng_seed = rng_seed;
    rec.genome = ga.best.genome.to_line();
    rec.satisfied = ga.best.score->angle_error < config.angle_tol &&
                    ga.best.score->infidelity < config.infid_tol;
    return rec;
}

FitnessScore score_of(const RunRecord& rec) {
    return FitnessScore{rec.angle_error, rec.infidelity};
}

// Sequence mode: among angle-satisfying candidates pick the lowest infidelity
// (ties by pair ordering, then shorter length); with no angle-satisfying
// candidate fall back to the overall pair-ordering best.
TaskOutcome reduce_sequence(const SweepConfig& config, const std::vector<TaskOutcome>& outcomes) {
    TaskOutcome best;
    bool best_angle_ok = false;
    for (const TaskOutcome& candidate : outcomes) {
        if (!candidate.valid) continue;
        const bool angle_ok = candidate.record.angle_error < config.angle_tol;
        if (!best.valid) {
            best = candidate;
            best_angle_ok = angle_ok;
            continue;
        }
        if (angle_ok != best_angle_ok) {
            if (angle_ok) {
                best = candidate;
                best_angle_ok = true;
            }
            continue;
        }
        if (angle_ok) {
            if (candidate.record.infidelity < best.record.infidelity) best = candidate;
        } else if (better(score_of(candidate.record), score_of(best.record),
                          config.compare_threshold)) {
            best = candidate;
        }
    }
    return best;
}

}  // namespace

void SweepConfig::validate() const {
    for (double f : frequencies_ghz) {
        if (!(f > 0.0)) throw ParameterError("qubit frequencies must be positive");
    }
    if (!(fg_ghz > 0.0)) throw ParameterError("generator frequency must be positive");
    if (length_min < 4 || length_max < length_min) {
        throw ParameterError("length range is empty or below the minimum of 4");
    }
    if (seeds_per_point < 1) throw ParameterError("seeds per point must be positive");
    if (workers < 1) throw ParameterError("worker count must be positive");
    ga_for(*this, length_min, 0).validate();
}

const std::vector<double>& default_frequency_grid() {
    static const std::vector<double> grid{
        4.54643, 4.59251, 4.6305,  4.652,   4.68842, 4.73047, 4.76289,
        4.78802, 4.80851, 4.87898, 4.89201, 4.90296, 5.18978, 5.20945,
        5.28923, 5.32036, 5.35835, 5.39307, 5.40655, 5.43571, 5.48906};
    return grid;
}

TransmonModel model_for(const SweepConfig& config, double f0_ghz) {
    return TransmonModel::from_frequencies(f0_ghz, config.alpha_ghz, config.delta_theta,
                                           config.dim);
}

DriveConfig drive_for(const SweepConfig& config) {
    return DriveConfig::from_frequency_ghz(config.fg_ghz);
}

GaConfig ga_for(const SweepConfig& config, int length, std::uint64_t rng_seed) {
    GaConfig ga;
    ga.sequence_length = length;
    ga.mode = config.mode;
    ga.alphabet = config.alphabet;
    ga.max_rep = config.max_rep;
    ga.max_duration_ns = config.max_duration_ns;
    ga.crossover_prob = config.crossover_prob;
    ga.mutation_prob = config.mutation_prob;
    ga.population_size = config.population_size;
    ga.max_iterations = config.max_iterations;
    ga.angle_tol = config.angle_tol;
    ga.infid_tol = config.infid_tol;
    ga.compare_threshold = config.compare_threshold;
    ga.rng_seed = rng_seed;
    ga.workers = 1; // sweep parallelism lives across evolve instances
    return ga;
}

std::uint64_t task_seed(std::uint64_t base_seed, int freq_index, int length, int attempt) {
    CounterRng rng = CounterRng::substream(
        base_seed, (std::uint64_t(std::uint32_t(freq_index)) << 32) | std::uint32_t(length),
        std::uint64_t(attempt));
    return rng.next();
}

SweepResult run_sweep(const SweepConfig& config,
                      const std::optional<std::filesystem::path>& out_dir,
                      const SweepHooks& hooks) {
    config.validate();
    const DriveConfig drive = drive_for(config);
    const std::size_t freq_count = config.frequencies_ghz.size();
    const int lengths = config.length_max - config.length_min + 1;

    std::mutex hook_mutex;
    auto report_task = [&](const RunRecord& rec) {
        if (!hooks.on_task) return;
        std::lock_guard<std::mutex> lock(hook_mutex);
        hooks.on_task(rec);
    };

    auto run_task = [&](int freq_index, int length, int attempt) {
        const std::uint64_t seed = task_seed(config.base_seed, freq_index, length, attempt);
        const TransmonModel model =
            model_for(config, config.frequencies_ghz[static_cast<std::size_t>(freq_index)]);
        EvolveHooks ga_hooks;
        ga_hooks.cancel = hooks.cancel;
        const GaResult ga = evolve(ga_for(config, length, seed), model, drive,
                                   TargetGate{config.theta_target}, ga_hooks);
        TaskOutcome outcome{make_record(config, freq_index, length, seed, ga), true};
        report_task(outcome.record);
        return outcome;
    };

    ThreadPool pool(config.workers);
    std::vector<RunRecord> records(freq_count);

    if (config.mode == SearchMode::sequence) {
        const std::size_t per_freq = std::size_t(lengths) * std::size_t(config.seeds_per_point);
        std::vector<TaskOutcome> outcomes(freq_count * per_freq);
        pool.parallel_for(freq_count * per_freq, [&](std::size_t t) {
            if (hooks.cancel && hooks.cancel->load(std::memory_order_relaxed)) return;
            const int freq_index = int(t / per_freq);
            const std::size_t within = t % per_freq;
            const int length = config.length_min + int(within / std::size_t(config.seeds_per_point));
            const int attempt = int(within % std::size_t(config.seeds_per_point));
            outcomes[t] = run_task(freq_index, length, attempt);
        });
        for (std::size_t f = 0; f < freq_count; ++f) {
            const std::vector<TaskOutcome> slice(outcomes.begin() + long(f * per_freq),
                                                 outcomes.begin() + long((f + 1) * per_freq));
            const TaskOutcome best = reduce_sequence(config, slice);
            if (best.valid) records[f] = best.record;
        }
    } else {
        // Ascending-length scan per frequency keeps the shortest satisfying
        // subsequence; the scan stops at the first satisfying length.
        pool.parallel_for(freq_count, [&](std::size_t f) {
            TaskOutcome best;
            for (int length = config.length_min; length <= config.length_max; ++length) {
                if (hooks.cancel && hooks.cancel->load(std::memory_order_relaxed)) break;
                TaskOutcome length_best;
                for (int attempt = 0; attempt < config.seeds_per_point; ++attempt) {
                    const TaskOutcome outcome = run_task(int(f), length, attempt);
                    if (!length_best.valid ||
                        (outcome.record.satisfied && !length_best.record.satisfied) ||
                        (outcome.record.satisfied == length_best.record.satisfied &&
                         better(score_of(outcome.record), score_of(length_best.record),
                                config.compare_threshold))) {
                        length_best = outcome;
                    }
                }
                if (!length_best.valid) continue;
                if (length_best.record.satisfied) {
                    best = length_best;
                    break;
                }
                if (!best.valid || better(score_of(length_best.record), score_of(best.record),
                                          config.compare_threshold)) {
                    best = length_best;
                }
            }
            if (best.valid) records[f] = best.record;
        });
    }

    SweepResult result;
    result.records = std::move(records);
    for (std::size_t f = 0; f < freq_count; ++f) {
        result.records[f].index = int(f) + 1;
        if (!result.records[f].satisfied) result.all_satisfied = false;
    }

    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        write_file_atomic(*out_dir / "results.csv", records_to_csv(result.records, config.mode));
        for (const RunRecord& rec : result.records) {
            if (rec.genome.empty()) continue;
            write_file_atomic(*out_dir / ("seq_" + std::to_string(rec.index) + ".txt"),
                              rec.genome + "\n");
        }
    }
    return result;
}

std::string records_to_csv(const std::vector<RunRecord>& records, SearchMode mode) {
    std::string out = mode == SearchMode::sequence ? kSequenceHeader : kSubsequenceHeader;
    out.push_back('\n');
    for (const RunRecord& r : records) {
        out += std::to_string(r.index);
        out += ',' + format_double(r.delta_theta);
        out += ',' + format_double(r.f0_ghz);
        if (mode == SearchMode::subsequence) {
            out += ',' + std::to_string(r.subsequence_length);
            out += ',' + std::to_string(r.repetitions);
        }
        out += ',' + std::to_string(r.sequence_length);
        out += ',' + format_double(r.duration_ns);
        out += ',' + format_double(r.angle_error);
        out += ',' + format_double(r.infidelity);
        out += ',' + format_double(r.wall_time);
        out += ',' + std::to_string(r.rng_seed);
        out += ',' + r.genome;
        out += ',';
        out += r.satisfied ? '1' : '0';
        out.push_back('\n');
    }
    return out;
}

SearchMode csv_mode(const std::string& text) {
    const std::size_t eol = text.find('\n');
    const std::string header = text.substr(0, eol);
    if (header == kSequenceHeader) return SearchMode::sequence;
    if (header == kSubsequenceHeader) return SearchMode::subsequence;
    throw std::runtime_error("unrecognized results csv header");
}

std::vector<RunRecord> records_from_csv(const std::string& text) {
    const SearchMode mode = csv_mode(text);
    std::vector<RunRecord> records;
    std::istringstream stream(text);
    std::string line;
    std::getline(stream, line); // header
    while (std::getline(stream, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        const std::size_t expected = mode == SearchMode::sequence ? 11 : 13;
        if (fields.size() != expected) {
            throw std::runtime_error("results csv row has " + std::to_string(fields.size()) +
                                     " fields, expected " + std::to_string(expected));
        }
        RunRecord r;
        std::size_t i = 0;
        r.index = int(parse_double(fields[i++]));
        r.delta_theta = parse_double(fields[i++]);
        r.f0_ghz = parse_double(fields[i++]);
        if (mode == SearchMode::subsequence) {
            r.subsequence_length = int(parse_double(fields[i++]));
            r.repetitions = int(parse_double(fields[i++]));
        }
        r.sequence_length = int(parse_double(fields[i++]));
        r.duration_ns = parse_double(fields[i++]);
        r.angle_error = parse_double(fields[i++]);
        r.infidelity = parse_double(fields[i++]);
        r.wall_time = parse_double(fields[i++]);
        r.rng_seed = std::stoull(fields[i++]);
        r.genome = fields[i++];
        r.satisfied = fields[i++] == "1";
        records.push_back(std::move(r));
    }
    return records;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), long(content.size()));
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace sfq
