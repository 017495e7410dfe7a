// main.cpp — sfqseq command line: search / sweep / score / oracle

#include <atomic>
#include <cmath>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfq/config.hpp"
#include "sfq/oracle.hpp"
#include "sfq/plot.hpp"
#include "sfq/sweep.hpp"

namespace {

std::atomic<bool> g_cancel{false};

void handle_sigint(int) { g_cancel.store(true); }

struct CommonOptions {
    std::string config_path;
    std::optional<double> fg_ghz;
    std::optional<double> delta_theta;
    std::optional<double> alpha_ghz;
    std::optional<int> dim;
    std::optional<double> theta_target;
    std::optional<std::string> mode;
    std::optional<std::string> alphabet;
    std::optional<int> length;
    std::optional<std::string> length_range;
    std::optional<int> max_rep;
    std::optional<double> max_duration;
    std::optional<std::uint64_t> seed;
    std::optional<int> seeds_per_point;
    std::optional<int> workers;
    std::optional<int> max_iterations;
    std::optional<double> angle_tol;
    std::optional<double> infid_tol;
    std::string out_dir;
    bool plots = false;
    bool progress = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON config file (flags override it)");
    cmd->add_option("--fg", opt.fg_ghz, "generator frequency, GHz");
    cmd->add_option("--delta-theta", opt.delta_theta, "per-pulse kick angle, rad");
    cmd->add_option("--alpha", opt.alpha_ghz, "anharmonicity, GHz");
    cmd->add_option("--dim", opt.dim, "truncation dimension");
    cmd->add_option("--theta", opt.theta_target, "target rotation angle, rad");
    cmd->add_option("--mode", opt.mode, "sequence|subsequence");
    cmd->add_option("--alphabet", opt.alphabet, "bipolar|unipolar");
    cmd->add_option("--length", opt.length, "genome length");
    cmd->add_option("--length-range", opt.length_range, "genome length range A..B");
    cmd->add_option("--max-rep", opt.max_rep, "subsequence repetitions bound");
    cmd->add_option("--max-duration", opt.max_duration, "gate duration cap, ns");
    cmd->add_option("--seed", opt.seed, "base RNG seed");
    cmd->add_option("--seeds-per-point", opt.seeds_per_point, "search restarts per grid point");
    cmd->add_option("--workers", opt.workers, "parallel evolve instances");
    cmd->add_option("--max-iterations", opt.max_iterations, "generation cap");
    cmd->add_option("--angle-tol", opt.angle_tol, "rotation-angle tolerance, rad");
    cmd->add_option("--infid-tol", opt.infid_tol, "infidelity tolerance");
    cmd->add_option("--out", opt.out_dir, "output directory");
    cmd->add_flag("--plots", opt.plots, "emit stem plots per record");
    cmd->add_flag("--progress", opt.progress, "log every finished task");
}

std::pair<int, int> parse_length_range(const std::string& text) {
    const std::size_t sep = text.find("..");
    if (sep == std::string::npos) {
        throw sfq::ParameterError("length range must look like A..B, got '" + text + "'");
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
}

sfq::SweepConfig build_config(const CommonOptions& opt) {
    sfq::SweepConfig config;
    config.frequencies_ghz = sfq::default_frequency_grid();
    if (!opt.config_path.empty()) config = sfq::load_sweep_config(opt.config_path);

    if (opt.fg_ghz) config.fg_ghz = *opt.fg_ghz;
    if (opt.delta_theta) config.delta_theta = *opt.delta_theta;
    if (opt.alpha_ghz) config.alpha_ghz = *opt.alpha_ghz;
    if (opt.dim) config.dim = *opt.dim;
    if (opt.theta_target) config.theta_target = *opt.theta_target;
    if (opt.mode) config.mode = sfq::search_mode_from_string(*opt.mode);
    if (opt.alphabet) config.alphabet = sfq::alphabet_from_string(*opt.alphabet);
    if (opt.length) config.length_min = config.length_max = *opt.length;
    if (opt.length_range) {
        const auto [lo, hi] = parse_length_range(*opt.length_range);
        config.length_min = lo;
        config.length_max = hi;
    }
    if (opt.max_rep) config.max_rep = *opt.max_rep;
    if (opt.max_duration) config.max_duration_ns = *opt.max_duration;
    if (opt.seed) config.base_seed = *opt.seed;
    if (opt.seeds_per_point) config.seeds_per_point = *opt.seeds_per_point;
    if (opt.workers) config.workers = *opt.workers;
    if (opt.max_iterations) config.max_iterations = *opt.max_iterations;
    if (opt.angle_tol) config.angle_tol = *opt.angle_tol;
    if (opt.infid_tol) config.infid_tol = *opt.infid_tol;
    return config;
}

void print_record(const sfq::RunRecord& rec, sfq::SearchMode mode) {
    std::printf("[%2d] f0=%.5f GHz  ", rec.index, rec.f0_ghz);
    if (mode == sfq::SearchMode::subsequence) {
        std::printf("sub=%d x%d  ", rec.subsequence_length, rec.repetitions);
    }
    std::printf("L=%d  duration=%.2f ns  angle_err=%.2e rad  infid=%.2e  %s  (%.1fs, seed %llu)\n",
                rec.sequence_length, rec.duration_ns, rec.angle_error, rec.infidelity,
                rec.satisfied ? "ok" : "UNSATISFIED", rec.wall_time,
                static_cast<unsigned long long>(rec.rng_seed));
}

int run_grid(const sfq::SweepConfig& config, const CommonOptions& opt) {
    sfq::SweepHooks hooks;
    hooks.cancel = &g_cancel;
    if (opt.progress) {
        hooks.on_task = [&](const sfq::RunRecord& rec) {
            std::fprintf(stderr, "  done f0=%.5f L=%d angle_err=%.2e infid=%.2e %s\n", rec.f0_ghz,
                         config.mode == sfq::SearchMode::subsequence ? rec.subsequence_length
                                                                     : rec.sequence_length,
                         rec.angle_error, rec.infidelity, rec.satisfied ? "ok" : "--");
        };
    }

    std::optional<std::filesystem::path> out;
    if (!opt.out_dir.empty()) out = opt.out_dir;
    const sfq::SweepResult result = sfq::run_sweep(config, out, hooks);

    for (const sfq::RunRecord& rec : result.records) print_record(rec, config.mode);
    if (out && opt.plots) {
        sfq::emit_plot(result.records, *out, sfq::drive_for(config).tick);
    }
    if (g_cancel.load()) {
        std::fprintf(stderr, "canceled\n");
        return 2;
    }
    return result.all_satisfied ? 0 : 2;
}

// Single-length search with per-generation logging; exercises the live
// progress callback instead of the per-task hook.
int run_search_with_progress(const sfq::SweepConfig& config, const CommonOptions& opt) {
    const double f0 = config.frequencies_ghz.at(0);
    const sfq::TransmonModel model = sfq::model_for(config, f0);
    const sfq::DriveConfig drive = sfq::drive_for(config);
    const std::uint64_t seed = sfq::task_seed(config.base_seed, 0, config.length_min, 0);

    sfq::EvolveHooks hooks;
    hooks.cancel = &g_cancel;
    hooks.on_generation = [](int gen, const sfq::FitnessScore& best) {
        if (gen % 25 == 0) {
            std::fprintf(stderr, "  gen %3d  angle_err=%.2e  infid=%.2e\n", gen, best.angle_error,
                         best.infidelity);
        }
    };
    const sfq::GaResult ga = sfq::evolve(sfq::ga_for(config, config.length_min, seed), model,
                                         drive, sfq::TargetGate{config.theta_target}, hooks);

    std::printf("%s after %d generations (%.1fs)\n",
                ga.terminated_early ? "converged" : (ga.canceled ? "canceled" : "iteration cap"),
                ga.generations_run, ga.wall_time);
    std::printf("genome %s\n", ga.best.genome.to_line().c_str());
    if (config.mode == sfq::SearchMode::subsequence) {
        std::printf("best repetitions %d (full length %zu)\n", ga.best.best_rep,
                    ga.best.genome.size() * std::size_t(ga.best.best_rep));
    }
    std::printf("angle_error=%.2e rad  infidelity=%.2e\n", ga.best.score->angle_error,
                ga.best.score->infidelity);
    if (!opt.out_dir.empty()) {
        const std::filesystem::path dir(opt.out_dir);
        std::filesystem::create_directories(dir);
        sfq::write_file_atomic(dir / "seq_1.txt", ga.best.genome.to_line() + "\n");
    }
    return ga.terminated_early ? 0 : 2;
}

std::string read_genome_argument(const std::string& genome, const std::string& genome_file) {
    if (!genome.empty()) return genome;
    if (genome_file.empty()) throw sfq::ParameterError("need --genome or --genome-file");
    std::ifstream in(genome_file);
    if (!in) throw std::runtime_error("cannot open genome file " + genome_file);
    std::string line;
    std::getline(in, line);
    return line;
}

int run_score(const sfq::SweepConfig& config, const std::string& genome_text) {
    const sfq::PulseSequence seq = sfq::PulseSequence::parse_line(genome_text, config.alphabet);
    const sfq::TransmonModel model = sfq::model_for(config, config.frequencies_ghz.at(0));
    const sfq::DriveConfig drive = sfq::drive_for(config);
    const sfq::Scorer scorer(model, drive, sfq::TargetGate{config.theta_target},
                             config.compare_threshold);

    if (config.mode == sfq::SearchMode::subsequence) {
        const auto result = scorer.score_subsequence(seq, config.max_rep);
        std::printf("subsequence length %zu, best repetitions %d (full length %zu)\n", seq.size(),
                    result.best_rep, seq.size() * std::size_t(result.best_rep));
        std::printf("angle_error=%.2e rad  infidelity=%.2e\n", result.score.angle_error,
                    result.score.infidelity);
    } else {
        const auto score = scorer.score_sequence(seq);
        std::printf("length %zu, duration %.2f ns\n", seq.size(), double(seq.size()) * drive.tick);
        std::printf("angle_error=%.2e rad  infidelity=%.2e\n", score.angle_error,
                    score.infidelity);
    }
    return 0;
}

int run_oracle(const sfq::SweepConfig& config, int exhaustive_length, const std::string& genome,
               const std::string& genome_file) {
    const sfq::DriveConfig drive = sfq::drive_for(config);
    const sfq::TargetGate gate{config.theta_target};

    if (exhaustive_length > 0) {
        const sfq::TransmonModel model = sfq::model_for(config, config.frequencies_ghz.at(0));
        const sfq::OracleReport report = sfq::exhaustive_search(
            exhaustive_length, model, drive, gate, config.alphabet, config.workers);
        std::printf("evaluated %llu genomes\n", static_cast<unsigned long long>(report.evaluated));
        std::printf("best %s  angle_error=%.2e rad  infidelity=%.2e\n",
                    report.best_genome.to_line().c_str(), report.best_score.angle_error,
                    report.best_score.infidelity);
        return 0;
    }

    // Two-level cross-check: closed-form SU(2) product vs the generic pipeline.
    const sfq::PulseSequence seq =
        sfq::PulseSequence::parse_line(read_genome_argument(genome, genome_file), config.alphabet);
    sfq::TransmonModel model = sfq::model_for(config, config.frequencies_ghz.at(0));
    model.dim = 2;
    const sfq::GateUnitary closed = sfq::two_level_propagate(seq, model, drive);
    const sfq::GateUnitary generic = sfq::propagate(seq, model, drive);
    const double deviation = (closed.matrix - generic.matrix).cwiseAbs().maxCoeff();
    const double angle = sfq::extract_angle(sfq::to_rotating_frame(closed, model));
    std::printf("two-level rotation angle %.9f rad; closed-form vs generic deviation %.3e\n",
                angle, deviation);
    return deviation < 1e-12 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_sigint);

    CLI::App app{"Pulse-train search for fast single-qubit gates under a digital SFQ drive"};
    app.require_subcommand(1);

    CommonOptions search_opt, sweep_opt, score_opt, oracle_opt;
    double search_f0 = 5.0, score_f0 = 5.0, oracle_f0 = 5.0;
    std::vector<double> sweep_f0;
    std::string score_genome, score_genome_file, oracle_genome, oracle_genome_file;
    int oracle_length = 0;

    CLI::App* search = app.add_subcommand("search", "search one qubit frequency");
    search->add_option("--f0", search_f0, "qubit frequency, GHz")->required();
    add_common_flags(search, search_opt);

    CLI::App* sweep = app.add_subcommand("sweep", "search a frequency grid");
    sweep->add_option("--f0", sweep_f0, "qubit frequencies, GHz (default: built-in 21-point grid)");
    add_common_flags(sweep, sweep_opt);

    CLI::App* score = app.add_subcommand("score", "score a provided genome");
    score->add_option("--f0", score_f0, "qubit frequency, GHz")->required();
    score->add_option("--genome", score_genome, "genome line over '+', '-', '0'");
    score->add_option("--genome-file", score_genome_file, "file holding the genome line");
    add_common_flags(score, score_opt);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive / two-level ground-truth checks");
    oracle->add_option("--f0", oracle_f0, "qubit frequency, GHz")->required();
    oracle->add_option("--exhaustive-length", oracle_length,
                       "enumerate every genome of this length");
    oracle->add_option("--genome", oracle_genome, "genome for the two-level cross-check");
    oracle->add_option("--genome-file", oracle_genome_file, "file holding the genome line");
    add_common_flags(oracle, oracle_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (search->parsed()) {
            sfq::SweepConfig config = build_config(search_opt);
            config.frequencies_ghz = {search_f0};
            if (search_opt.progress && config.length_min == config.length_max) {
                return run_search_with_progress(config, search_opt);
            }
            return run_grid(config, search_opt);
        }
        if (sweep->parsed()) {
            sfq::SweepConfig config = build_config(sweep_opt);
            if (!sweep_f0.empty()) config.frequencies_ghz = sweep_f0;
            return run_grid(config, sweep_opt);
        }
        if (score->parsed()) {
            sfq::SweepConfig config = build_config(score_opt);
            config.frequencies_ghz = {score_f0};
            return run_score(config, read_genome_argument(score_genome, score_genome_file));
        }
        if (oracle->parsed()) {
            sfq::SweepConfig config = build_config(oracle_opt);
            config.frequencies_ghz = {oracle_f0};
            return run_oracle(config, oracle_length, oracle_genome, oracle_genome_file);
        }
    } catch (const sfq::ParameterError& e) {
        std::fprintf(stderr, "parameter error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
