// sequence.hpp — Pulse trains over the ternary {-1, 0, +1} (or unipolar {0, +1}) alphabet

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sfq/errors.hpp"

namespace sfq {

enum class Alphabet { bipolar, unipolar };

const char* to_string(Alphabet a);
Alphabet alphabet_from_string(std::string_view name);

bool alphabet_allows(Alphabet a, int symbol);
int alphabet_size(Alphabet a);

// Symbols of `a` in enumeration order: bipolar (-1, 0, +1), unipolar (0, +1).
const std::vector<std::int8_t>& alphabet_symbols(Alphabet a);

// The values a site may mutate to, i.e. the alphabet minus `current`.
std::vector<std::int8_t> alternative_symbols(Alphabet a, std::int8_t current);

// One symbol per generator clock tick. Symbols are validated against the
// declared alphabet on every construction and mutation.
class PulseSequence {
public:
    static constexpr std::size_t kMaxLength = 2048;

    PulseSequence() = default;
    PulseSequence(std::vector<std::int8_t> symbols, Alphabet alphabet = Alphabet::bipolar);

    static PulseSequence zeros(std::size_t length, Alphabet alphabet = Alphabet::bipolar);

    // "+0-..." single-line form.
    static PulseSequence parse_line(std::string_view text, Alphabet alphabet = Alphabet::bipolar);
    // "1,0,-1" comma-separated integer form.
    static PulseSequence parse_csv(std::string_view text, Alphabet alphabet = Alphabet::bipolar);

    std::string to_line() const;
    std::string to_csv() const;

    std::size_t size() const { return symbols_.size(); }
    std::int8_t operator[](std::size_t i) const { return symbols_[i]; }
    void set(std::size_t i, std::int8_t value);

    Alphabet alphabet() const { return alphabet_; }
    const std::vector<std::int8_t>& symbols() const { return symbols_; }

    std::size_t count_nonzero() const;

    PulseSequence repeated(int times) const;
    PulseSequence concatenated(const PulseSequence& tail) const;

    bool operator==(const PulseSequence&) const = default;

private:
    std::vector<std::int8_t> symbols_;
    Alphabet alphabet_ = Alphabet::bipolar;
};

}  // namespace sfq
