#include "sfq/sequence.hpp"

#include <charconv>

namespace sfq {

const char* to_string(Alphabet a) {
    return a == Alphabet::bipolar ? "bipolar" : "unipolar";
}

Alphabet alphabet_from_string(std::string_view name) {
    if (name == "bipolar") return Alphabet::bipolar;
    if (name == "unipolar") return Alphabet::unipolar;
    throw ParameterError("unknown alphabet: " + std::string(name));
}

bool alphabet_allows(Alphabet a, int symbol) {
    if (symbol == 0 || symbol == 1) return true;
    return symbol == -1 && a == Alphabet::bipolar;
}

int alphabet_size(Alphabet a) {
    return a == Alphabet::bipolar ? 3 : 2;
}

const std::vector<std::int8_t>& alphabet_symbols(Alphabet a) {
    static const std::vector<std::int8_t> bipolar{-1, 0, 1};
    static const std::vector<std::int8_t> unipolar{0, 1};
    return a == Alphabet::bipolar ? bipolar : unipolar;
}

std::vector<std::int8_t> alternative_symbols(Alphabet a, std::int8_t current) {
    if (!alphabet_allows(a, current)) {
        throw SequenceError("symbol outside alphabet: " + std::to_string(int(current)));
    }
    std::vector<std::int8_t> out;
    for (std::int8_t s : alphabet_symbols(a)) {
        if (s != current) out.push_back(s);
    }
    return out;
}

namespace {

void check_length(std::size_t length) {
    if (length < 1) throw SequenceError("pulse sequence must contain at least one symbol");
    if (length > PulseSequence::kMaxLength) {
        throw SequenceError("pulse sequence length " + std::to_string(length) + " exceeds bound " +
                            std::to_string(PulseSequence::kMaxLength));
    }
}

}  // namespace

PulseSequence::PulseSequence(std::vector<std::int8_t> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    check_length(symbols_.size());
    for (std::int8_t s : symbols_) {
        if (!alphabet_allows(alphabet_, s)) {
            throw SequenceError("symbol outside alphabet: " + std::to_string(int(s)));
        }
    }
}

PulseSequence PulseSequence::zeros(std::size_t length, Alphabet alphabet) {
    check_length(length);
    PulseSequence seq;
    seq.symbols_.assign(length, 0);
    seq.alphabet_ = alphabet;
    return seq;
}

PulseSequence PulseSequence::parse_line(std::string_view text, Alphabet alphabet) {
    std::vector<std::int8_t> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+': symbols.push_back(1); break;
            case '-': symbols.push_back(-1); break;
            case '0': symbols.push_back(0); break;
            case '\n': case '\r': case ' ': case '\t': break;
            default:
                throw SequenceError(std::string("unexpected character in pulse line: '") + c + "'");
        }
    }
    return PulseSequence(std::move(symbols), alphabet);
}

PulseSequence PulseSequence::parse_csv(std::string_view text, Alphabet alphabet) {
    std::vector<std::int8_t> symbols;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                                                  : comma - pos);
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\n' ||
                                  field.back() == '\r')) {
            field.remove_suffix(1);
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size()) {
            throw SequenceError("bad integer field in pulse csv: '" + std::string(field) + "'");
        }
        if (value < -1 || value > 1) {
            throw SequenceError("symbol outside alphabet: " + std::to_string(value));
        }
        symbols.push_back(static_cast<std::int8_t>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return PulseSequence(std::move(symbols), alphabet);
}

std::string PulseSequence::to_line() const {
    std::string out;
    out.reserve(symbols_.size());
    for (std::int8_t s : symbols_) out.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
    return out;
}

std::string PulseSequence::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(int(symbols_[i]));
    }
    return out;
}

void PulseSequence::set(std::size_t i, std::int8_t value) {
    if (i >= symbols_.size()) throw SequenceError("site index out of range");
    if (!alphabet_allows(alphabet_, value)) {
        throw SequenceError("symbol outside alphabet: " + std::to_string(int(value)));
    }
    symbols_[i] = value;
}

std::size_t PulseSequence::count_nonzero() const {
    std::size_t n = 0;
    for (std::int8_t s : symbols_) n += (s != 0);
    return n;
}

PulseSequence PulseSequence::repeated(int times) const {
    if (times < 1) throw SequenceError("repetition count must be positive");
    std::vector<std::int8_t> out;
    out.reserve(symbols_.size() * static_cast<std::size_t>(times));
    for (int r = 0; r < times; ++r) out.insert(out.end(), symbols_.begin(), symbols_.end());
    return PulseSequence(std::move(out), alphabet_);
}

PulseSequence PulseSequence::concatenated(const PulseSequence& tail) const {
    std::vector<std::int8_t> out = symbols_;
    out.insert(out.end(), tail.symbols_.begin(), tail.symbols_.end());
    return PulseSequence(std::move(out), alphabet_);
}

}  // namespace sfq
