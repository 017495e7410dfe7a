// plot.hpp — Deterministic stem plots of pulse trains (SVG and text art)

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sfq/sweep.hpp"

namespace sfq {

// Stem plot of one genome: x = tick index (time in ns on the axis),
// y in {-1, 0, +1}. Byte output is a pure function of the inputs.
std::string render_svg(const PulseSequence& seq, double tick_ns, const std::string& title);
std::string render_stem_text(const PulseSequence& seq, double tick_ns, const std::string& title);

struct PlotFiles {
    std::filesystem::path svg;
    std::filesystem::path stem;
};

// One seq_<N>.svg and seq_<N>_stem.txt per record, keyed by record index.
std::vector<PlotFiles> emit_plot(const std::vector<RunRecord>& records,
                                 const std::filesystem::path& out_dir, double tick_ns);

}  // namespace sfq
