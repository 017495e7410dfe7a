// helpers.hpp — Shared fixtures for the unit tests

#pragma once

#include <vector>

#include "sfq/model.hpp"
#include "sfq/rng.hpp"
#include "sfq/sequence.hpp"

namespace sfq::testing {

inline TransmonModel default_model(int dim = 5, double f0_ghz = 5.0) {
    return TransmonModel::from_frequencies(f0_ghz, 0.25, 0.032, dim);
}

inline DriveConfig default_drive() { return DriveConfig::from_frequency_ghz(25.0); }

inline PulseSequence random_sequence(CounterRng& rng, std::size_t length,
                                     Alphabet alphabet = Alphabet::bipolar) {
    const auto& symbols = alphabet_symbols(alphabet);
    std::vector<std::int8_t> out(length);
    for (auto& s : out) s = symbols[rng.next_below(symbols.size())];
    return PulseSequence(std::move(out), alphabet);
}

// Unipolar comb: one +1 kick every `spacing` ticks, M kicks total.
inline PulseSequence resonant_comb(int spacing, int kicks) {
    std::vector<std::int8_t> out(static_cast<std::size_t>(spacing) * kicks, 0);
    for (int m = 0; m < kicks; ++m) out[static_cast<std::size_t>(m) * spacing] = 1;
    return PulseSequence(std::move(out), Alphabet::unipolar);
}

}  // namespace sfq::testing
