#include "sfq/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "sfq/parallel.hpp"

namespace sfq {

namespace {

// Substream roles.
constexpr std::uint64_t kRoleInit = 0;
constexpr std::uint64_t kRoleBreed = 1;

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

std::size_t argbest(const std::vector<Individual>& population, double threshold) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
        if (better(*population[i].score, *population[best].score, threshold)) best = i;
    }
    return best;
}

// Indices of the two worst individuals; ties keep the lower index.
std::pair<std::size_t, std::size_t> two_worst(const std::vector<Individual>& population,
                                              double threshold) {
    std::size_t w1 = 0;
    for (std::size_t i = 1; i < population.size(); ++i) {
        if (better(*population[w1].score, *population[i].score, threshold)) w1 = i;
    }
    std::size_t w2 = w1 == 0 ? 1 : 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (i == w1) continue;
        if (better(*population[w2].score, *population[i].score, threshold)) w2 = i;
    }
    return {w1, w2};
}

// Indices of the two best individuals; ties keep the lower index.
std::pair<std::size_t, std::size_t> two_best(const std::vector<Individual>& population,
                                             double threshold) {
    std::size_t b1 = argbest(population, threshold);
    std::size_t b2 = b1 == 0 ? 1 : 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (i == b1) continue;
        if (better(*population[i].score, *population[b2].score, threshold)) b2 = i;
    }
    return {b1, b2};
}

int effective_max_rep(const GaConfig& config, const DriveConfig& drive) {
    if (config.mode != SearchMode::subsequence) return 1;
    int cap = config.max_rep;
    if (config.max_duration_ns > 0.0) {
        const double per_rep = double(config.sequence_length) * drive.tick;
        const int duration_cap = static_cast<int>(std::floor(config.max_duration_ns / per_rep));
        cap = std::min(cap, duration_cap);
    }
    if (cap < 1) {
        throw ParameterError("gate-duration cap leaves no room for a single repetition");
    }
    return cap;
}

}  // namespace

const char* to_string(SearchMode m) {
    return m == SearchMode::sequence ? "sequence" : "subsequence";
}

SearchMode search_mode_from_string(std::string_view name) {
    if (name == "sequence") return SearchMode::sequence;
    if (name == "subsequence") return SearchMode::subsequence;
    throw ParameterError("unknown search mode: " + std::string(name));
}

void GaConfig::validate() const {
    if (sequence_length < 4) throw ParameterError("sequence length must be at least 4");
    if (sequence_length > int(PulseSequence::kMaxLength)) {
        throw ParameterError("sequence length exceeds the sanity bound");
    }
    if (crossover_prob < 0.0 || crossover_prob > 1.0 || mutation_prob < 0.0 ||
        mutation_prob > 1.0) {
        throw ParameterError("crossover and mutation probabilities must lie in [0, 1]");
    }
    if (max_iterations < 1) throw ParameterError("iteration cap must be positive");
    if (effective_population() < 3) throw ParameterError("population must hold at least 3");
    if (mode == SearchMode::subsequence &&
        (max_rep < 1 || max_rep > Scorer::kMaxRepBound)) {
        throw ParameterError("repetition bound must lie in [1, " +
                             std::to_string(Scorer::kMaxRepBound) + "]");
    }
    if (!(angle_tol > 0.0) || !(infid_tol > 0.0)) {
        throw ParameterError("termination tolerances must be positive");
    }
}

PulseSequence harmonic_seed(const TransmonModel& model, const DriveConfig& drive, int length,
                            double threshold_fraction, Alphabet alphabet) {
    if (length < 1) throw ParameterError("seed length must be positive");
    if (threshold_fraction < 0.0 || threshold_fraction >= 1.0) {
        throw ParameterError("threshold fraction must lie in [0, 1)");
    }
    std::vector<std::int8_t> symbols(static_cast<std::size_t>(length), 0);
    for (int k = 0; k < length; ++k) {
        // Kicks fire at the start of a tick, where a kick acts about the y
        // axis rotated by the frame phase ω₀ t. The comb therefore sums
        // coherently toward the ideal y rotation when pulses track the
        // extrema of -cos(ω₀ t) with the signal's own sign as polarity.
        const double s = -std::cos(model.omega0 * double(k) * drive.tick);
        if (std::abs(s) > threshold_fraction) {
            int sym = sign_of(s);
            if (alphabet == Alphabet::unipolar && sym < 0) sym = 0;
            symbols[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(sym);
        }
    }
    return PulseSequence(std::move(symbols), alphabet);
}

SeedChoice balanced_seed(const TransmonModel& model, const DriveConfig& drive, int length,
                         Alphabet alphabet) {
    const double target = 0.5 * double(length);
    double lo = 0.0;
    double hi = 1.0 - 1e-12;

    SeedChoice best{harmonic_seed(model, drive, length, lo, alphabet), lo};
    double best_gap = std::abs(double(best.sequence.count_nonzero()) - target);

    for (int iter = 0; iter < 48 && best_gap > 0.5; ++iter) {
        const double mid = 0.5 * (lo + hi);
        PulseSequence candidate = harmonic_seed(model, drive, length, mid, alphabet);
        const double nonzero = double(candidate.count_nonzero());
        const double gap = std::abs(nonzero - target);
        if (gap < best_gap) {
            best = {std::move(candidate), mid};
            best_gap = gap;
        }
        if (nonzero > target) {
            lo = mid; // too many pulses: raise the threshold
        } else {
            hi = mid;
        }
    }
    return best;
}

std::vector<Individual> init_population(const PulseSequence& seed, const GaConfig& config,
                                        CounterRng& rng) {
    if (int(seed.size()) != config.sequence_length) {
        throw ParameterError("seed length does not match the configured sequence length");
    }
    const std::size_t n = static_cast<std::size_t>(config.effective_population());
    std::vector<Individual> population;
    population.reserve(n);
    population.push_back({seed, std::nullopt, 1});

    for (std::size_t site = 0; site < seed.size() && population.size() < n; ++site) {
        for (std::int8_t alt : alternative_symbols(seed.alphabet(), seed[site])) {
            if (population.size() >= n) break;
            PulseSequence variant = seed;
            variant.set(site, alt);
            population.push_back({std::move(variant), std::nullopt, 1});
        }
    }

    // Narrow alphabets yield fewer single-site variants than slots: pad with
    // random single-site flips of genomes already in the population.
    while (population.size() < n) {
        const std::size_t pick = rng.next_below(population.size());
        PulseSequence genome = population[pick].genome;
        const std::size_t site = rng.next_below(genome.size());
        const auto alts = alternative_symbols(genome.alphabet(), genome[site]);
        genome.set(site, alts[rng.next_below(alts.size())]);
        population.push_back({std::move(genome), std::nullopt, 1});
    }
    return population;
}

std::pair<std::size_t, std::size_t> select_parents(const std::vector<Individual>& population,
                                                   CounterRng& rng, double compare_threshold) {
    const std::size_t n = population.size();
    if (n < 3) throw ParameterError("tournament selection needs a population of at least 3");

    std::size_t picks[3];
    picks[0] = rng.next_below(n);
    do {
        picks[1] = rng.next_below(n);
    } while (picks[1] == picks[0]);
    do {
        picks[2] = rng.next_below(n);
    } while (picks[2] == picks[0] || picks[2] == picks[1]);

    // Order the three by (score, index); the best two become parents.
    auto precedes = [&](std::size_t a, std::size_t b) {
        const auto c = compare(*population[a].score, *population[b].score, compare_threshold);
        if (c != 0) return c < 0;
        return a < b;
    };
    std::sort(picks, picks + 3, precedes);
    return {picks[0], picks[1]};
}

std::pair<PulseSequence, PulseSequence> crossover_at(const PulseSequence& p1,
                                                     const PulseSequence& p2, int point) {
    if (p1.size() != p2.size()) throw ParameterError("parents must have equal length");
    if (point < 1 || point >= int(p1.size())) {
        throw ParameterError("crossover point must lie in [1, L-1]");
    }
    std::vector<std::int8_t> c1 = p1.symbols();
    std::vector<std::int8_t> c2 = p2.symbols();
    for (std::size_t i = static_cast<std::size_t>(point); i < c1.size(); ++i) {
        std::swap(c1[i], c2[i]);
    }
    return {PulseSequence(std::move(c1), p1.alphabet()), PulseSequence(std::move(c2), p2.alphabet())};
}

std::pair<PulseSequence, PulseSequence> crossover(const PulseSequence& p1,
                                                  const PulseSequence& p2, double crossover_prob,
                                                  CounterRng& rng) {
    if (p1.size() != p2.size()) throw ParameterError("parents must have equal length");
    if (rng.next_double() < crossover_prob && p1.size() >= 2) {
        const int point = 1 + int(rng.next_below(p1.size() - 1));
        return crossover_at(p1, p2, point);
    }
    return {p1, p2};
}

PulseSequence mutate(const PulseSequence& genome, double mutation_prob, CounterRng& rng) {
    if (rng.next_double() >= mutation_prob) return genome;
    PulseSequence mutated = genome;
    const std::size_t site = rng.next_below(genome.size());
    const auto alts = alternative_symbols(genome.alphabet(), genome[site]);
    mutated.set(site, alts[rng.next_below(alts.size())]);
    return mutated;
}

GaResult evolve(const GaConfig& config, const TransmonModel& model, const DriveConfig& drive,
                const TargetGate& gate, const EvolveHooks& hooks) {
    config.validate();
    model.validate();
    gate.validate();
    const auto t_start = std::chrono::steady_clock::now();

    const Scorer scorer(model, drive, gate, config.compare_threshold);
    const int max_rep = effective_max_rep(config, drive);
    const std::size_t n = static_cast<std::size_t>(config.effective_population());
    const double threshold = config.compare_threshold;

    CounterRng init_rng = CounterRng::substream(config.rng_seed, 0, kRoleInit);
    SeedChoice seed = balanced_seed(model, drive, config.sequence_length, config.alphabet);
    std::vector<Individual> population = init_population(seed.sequence, config, init_rng);
    std::vector<Individual> next;
    next.reserve(n);

    ThreadPool pool(ThreadPool::resolve_workers(config.workers));
    std::vector<std::size_t> unscored;
    unscored.reserve(n);

    auto score_population = [&](std::vector<Individual>& pop) {
        unscored.clear();
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (!pop[i].score) unscored.push_back(i);
        }
        pool.parallel_for(unscored.size(), [&](std::size_t t) {
            Individual& ind = pop[unscored[t]];
            if (config.mode == SearchMode::sequence) {
                ind.score = scorer.score_sequence(ind.genome);
            } else {
                const SubsequenceScore s = scorer.score_subsequence(ind.genome, max_rep);
                ind.score = s.score;
                ind.best_rep = s.best_rep;
            }
        });
    };

    GaResult result;
    // Best two of the previous generation, swapped in for the two worst of the
    // new one once that generation has been scored.
    std::optional<std::pair<Individual, Individual>> adjustment;
    bool have_best = false;

    for (int gen = 0; gen < config.max_iterations; ++gen) {
        score_population(population);
        if (adjustment) {
            const auto [w1, w2] = two_worst(population, threshold);
            population[w1] = adjustment->first;
            population[w2] = adjustment->second;
            adjustment.reset();
        }

        const std::size_t best_idx = argbest(population, threshold);
        const Individual& generation_best = population[best_idx];
        if (!have_best || better(*generation_best.score, *result.best.score, threshold)) {
            result.best = generation_best;
            have_best = true;
        }
        result.history.push_back(*result.best.score);
        result.generations_run = gen + 1;
        if (hooks.on_generation) hooks.on_generation(gen, *generation_best.score);

        if (result.best.score->angle_error < config.angle_tol &&
            result.best.score->infidelity < config.infid_tol) {
            result.terminated_early = true;
            break;
        }
        if (hooks.cancel && hooks.cancel->load(std::memory_order_relaxed)) {
            result.canceled = true;
            break;
        }
        if (gen + 1 == config.max_iterations) break; // a final brood would never be scored

        CounterRng rng = CounterRng::substream(config.rng_seed, std::uint64_t(gen), kRoleBreed);
        next.clear();
        const std::size_t children_needed = n - 1;
        while (next.size() < children_needed) {
            const auto [pa, pb] = select_parents(population, rng, threshold);
            auto [c1, c2] = crossover(population[pa].genome, population[pb].genome,
                                      config.crossover_prob, rng);
            PulseSequence m1 = mutate(c1, config.mutation_prob, rng);
            PulseSequence m2 = mutate(c2, config.mutation_prob, rng);
            next.push_back({std::move(m1), std::nullopt, 1});
            if (next.size() < children_needed) {
                next.push_back({std::move(m2), std::nullopt, 1});
            }
        }
        next.push_back(generation_best); // implicit elitism fills the odd slot

        const auto [b1, b2] = two_best(population, threshold);
        adjustment = std::make_pair(population[b1], population[b2]);
        population.swap(next);
    }

    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

}  // namespace sfq
