#include "sfq/plot.hpp"

#include <cstdio>

namespace sfq {

namespace {

std::string fmt(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

}  // namespace

std::string render_svg(const PulseSequence& seq, double tick_ns, const std::string& title) {
    const int n = int(seq.size());
    const double px_per_tick = n > 200 ? 4.0 : 8.0;
    const double margin = 40.0;
    const double stem_height = 40.0;
    const double width = 2.0 * margin + px_per_tick * double(n);
    const double height = 2.0 * margin + 2.0 * stem_height;
    const double baseline = margin + stem_height;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
           fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt(margin) + "\" y=\"" + fmt(margin - 16.0) +
           "\" font-family=\"monospace\" font-size=\"12\">" + title + "</text>\n";
    svg += "<line x1=\"" + fmt(margin) + "\" y1=\"" + fmt(baseline) + "\" x2=\"" +
           fmt(width - margin) + "\" y2=\"" + fmt(baseline) +
           "\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    // Time labels every 1 ns.
    const int ticks_per_ns = tick_ns > 0.0 ? int(1.0 / tick_ns + 0.5) : 0;
    if (ticks_per_ns > 0) {
        for (int k = 0; k <= n; k += ticks_per_ns) {
            const double x = margin + px_per_tick * double(k);
            svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(baseline - 3.0) + "\" x2=\"" + fmt(x) +
                   "\" y2=\"" + fmt(baseline + 3.0) + "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
            svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(height - margin + 24.0) +
                   "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" +
                   fmt(double(k) * tick_ns) + "</text>\n";
        }
        svg += "<text x=\"" + fmt(width - margin) + "\" y=\"" + fmt(height - margin + 36.0) +
               "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"end\">t (ns)</text>\n";
    }

    for (int k = 0; k < n; ++k) {
        const double x = margin + px_per_tick * (double(k) + 0.5);
        const int s = seq[std::size_t(k)];
        if (s == 0) {
            svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(baseline) +
                   "\" r=\"1\" fill=\"#bbb\"/>\n";
        } else {
            const double y = baseline - double(s) * stem_height;
            const char* color = s > 0 ? "#1f77b4" : "#d62728";
            svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(baseline) + "\" x2=\"" + fmt(x) +
                   "\" y2=\"" + fmt(y) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
            svg += "<circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"2\" fill=\"" + color +
                   "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_stem_text(const PulseSequence& seq, double tick_ns, const std::string& title) {
    const std::size_t n = seq.size();
    std::string up(n, ' ');
    std::string mid(n, ' ');
    std::string down(n, ' ');
    for (std::size_t k = 0; k < n; ++k) {
        switch (seq[k]) {
            case 1: up[k] = '|'; break;
            case -1: down[k] = '|'; break;
            default: mid[k] = '.'; break;
        }
    }
    std::string out;
    out += "# " + title + "\n";
    out += "# " + std::to_string(n) + " ticks x " + fmt(tick_ns) + " ns\n";
    out += "+1 " + up + "\n";
    out += " 0 " + mid + "\n";
    out += "-1 " + down + "\n";
    return out;
}

std::vector<PlotFiles> emit_plot(const std::vector<RunRecord>& records,
                                 const std::filesystem::path& out_dir, double tick_ns) {
    std::filesystem::create_directories(out_dir);
    std::vector<PlotFiles> files;
    files.reserve(records.size());
    for (const RunRecord& rec : records) {
        if (rec.genome.empty()) continue;
        const PulseSequence seq = PulseSequence::parse_line(rec.genome);
        const std::string title = "seq " + std::to_string(rec.index) + "  f0=" +
                                  std::to_string(rec.f0_ghz) + " GHz";
        PlotFiles out;
        out.svg = out_dir / ("seq_" + std::to_string(rec.index) + ".svg");
        out.stem = out_dir / ("seq_" + std::to_string(rec.index) + "_stem.txt");
        write_file_atomic(out.svg, render_svg(seq, tick_ns, title));
        write_file_atomic(out.stem, render_stem_text(seq, tick_ns, title));
        files.push_back(std::move(out));
    }
    return files;
}

}  // namespace sfq
