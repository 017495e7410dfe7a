#include "sfq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sfq/parallel.hpp"

namespace sfq {

GateUnitary two_level_propagate(const PulseSequence& seq, const TransmonModel& model,
                                const DriveConfig& drive) {
    if (model.dim != 2) throw ParameterError("two-level oracle requires dim == 2");
    model.validate();
    using cd = std::complex<double>;

    const double half = 0.5 * model.delta_theta;
    const double c = std::cos(half);
    const double s = std::sin(half);
    // exp(-i E_1 T_g) with E_1 = omega0 (E_0 = 0).
    const cd phase = std::polar(1.0, -model.omega0 * drive.tick);

    // Current unitary [[a, b], [e, f]], updated tick by tick.
    cd a = 1.0, b = 0.0, e = 0.0, f = 1.0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const int sym = seq[k];
        if (sym != 0) {
            // Plane rotation [[c, -σs], [σs, c]] applied from the left.
            const double rs = sym > 0 ? s : -s;
            const cd na = c * a - rs * e;
            const cd nb = c * b - rs * f;
            const cd ne = rs * a + c * e;
            const cd nf = rs * b + c * f;
            a = na; b = nb; e = ne; f = nf;
        }
        // Free evolution: scale the |1> row.
        e *= phase;
        f *= phase;
    }

    GateUnitary out;
    out.matrix.resize(2, 2);
    out.matrix << a, b, e, f;
    out.total_time = double(seq.size()) * drive.tick;
    return out;
}

PulseSequence genome_at_index(std::uint64_t index, int length, Alphabet alphabet) {
    const auto& symbols = alphabet_symbols(alphabet);
    const std::uint64_t base = symbols.size();
    std::vector<std::int8_t> genome(static_cast<std::size_t>(length));
    for (int site = 0; site < length; ++site) {
        genome[static_cast<std::size_t>(site)] = symbols[index % base];
        index /= base;
    }
    return PulseSequence(std::move(genome), alphabet);
}

OracleReport exhaustive_search(int length, const TransmonModel& model, const DriveConfig& drive,
                               const TargetGate& gate, Alphabet alphabet, int workers) {
    if (length < 1) throw ParameterError("genome length must be positive");
    const std::uint64_t base = static_cast<std::uint64_t>(alphabet_size(alphabet));
    std::uint64_t total = 1;
    for (int i = 0; i < length; ++i) {
        if (total > kExhaustiveBound / base) {
            throw ParameterError("genome space " + std::to_string(base) + "^" +
                                 std::to_string(length) + " exceeds the exhaustive bound " +
                                 std::to_string(kExhaustiveBound));
        }
        total *= base;
    }
    if (total > kExhaustiveBound) {
        throw ParameterError("genome space exceeds the exhaustive bound " +
                             std::to_string(kExhaustiveBound));
    }

    const Scorer scorer(model, drive, gate);
    ThreadPool pool(ThreadPool::resolve_workers(workers));
    const std::size_t chunks = static_cast<std::size_t>(pool.workers()) * 8;
    const std::uint64_t chunk_size = (total + chunks - 1) / chunks;

    struct ChunkBest {
        std::uint64_t index = 0;
        FitnessScore score;
        bool valid = false;
    };
    std::vector<ChunkBest> bests(chunks);

    pool.parallel_for(chunks, [&](std::size_t chunk) {
        const std::uint64_t begin = chunk * chunk_size;
        const std::uint64_t end = std::min(total, begin + chunk_size);
        ChunkBest local;
        for (std::uint64_t g = begin; g < end; ++g) {
            const FitnessScore score =
                scorer.score_sequence(genome_at_index(g, length, alphabet));
            if (!local.valid || better(score, local.score, scorer.compare_threshold())) {
                local = {g, score, true};
            }
        }
        bests[chunk] = local;
    });

    // Deterministic reduce: pair ordering, lowest index on ties.
    ChunkBest overall;
    for (const ChunkBest& candidate : bests) {
        if (!candidate.valid) continue;
        if (!overall.valid || better(candidate.score, overall.score, scorer.compare_threshold())) {
            overall = candidate;
        }
    }

    OracleReport report;
    report.best_genome = genome_at_index(overall.index, length, alphabet);
    report.best_score = overall.score;
    report.evaluated = total;
    return report;
}

}  // namespace sfq
