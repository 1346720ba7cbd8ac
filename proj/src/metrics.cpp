#include "mssim/metrics.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <stdexcept>

namespace mssim {

namespace {

constexpr const char* kCsvHeader =
    "tick,virus,treg_rest,treg_act,teff_rest,teff_act,cytokine,"
    "total_myelin,recoverable,unrecoverable,bbb_damaged";

} // namespace

std::string format_trimmed(double v, int max_decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", max_decimals, v);
    std::string s = buf;
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

MetricsRecord collect_metrics(const WorldState& w) {
    MetricsRecord r;
    r.tick = w.tick;
    for (const AgentState& a : w.agents) {
        if (!a.alive) continue;
        switch (a.breed) {
            case Breed::TregResting: ++r.n_treg_rest; break;
            case Breed::TregActive: ++r.n_treg_act; break;
            case Breed::TeffResting: ++r.n_teff_rest; break;
            case Breed::TeffActive: ++r.n_teff_act; break;
            case Breed::Virus: ++r.n_virus; break;
            case Breed::Cytokine: ++r.n_cytokine; break;
        }
    }
    for (const PatchState& p : w.grid.patches) {
        if (p.zone == Zone::WhiteMatter) {
            r.total_myelin += p.myelin;
            if (p.myelin == 0.0)
                ++r.unrecoverable;
            else
                ++r.recoverable;
        } else if (p.zone == Zone::Barrier && p.damaged) {
            ++r.bbb_damaged;
        }
    }
    return r;
}

std::string write_csv(std::span<const MetricsRecord> records) {
    std::string out = kCsvHeader;
    out += '\n';
    char buf[160];
    for (const MetricsRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%d,%d,%d,%d,%d,%d,", r.tick, r.n_virus,
                      r.n_treg_rest, r.n_treg_act, r.n_teff_rest, r.n_teff_act, r.n_cytokine);
        out += buf;
        out += format_trimmed(r.total_myelin, 2);
        std::snprintf(buf, sizeof(buf), ",%d,%d,%d\n", r.recoverable, r.unrecoverable,
                      r.bbb_damaged);
        out += buf;
    }
    return out;
}

std::vector<MetricsRecord> parse_csv(std::string_view text) {
    std::vector<MetricsRecord> records;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string line{text.substr(pos, eol - pos)};
        pos = eol + 1;
        if (line.empty()) continue;
        if (first) {
            if (line != kCsvHeader) throw std::runtime_error("metrics csv: bad header");
            first = false;
            continue;
        }
        MetricsRecord r;
        double myelin = 0.0;
        unsigned long long tick = 0;
        const int n = std::sscanf(line.c_str(), "%llu,%d,%d,%d,%d,%d,%d,%lf,%d,%d,%d", &tick,
                                  &r.n_virus, &r.n_treg_rest, &r.n_treg_act, &r.n_teff_rest,
                                  &r.n_teff_act, &r.n_cytokine, &myelin, &r.recoverable,
                                  &r.unrecoverable, &r.bbb_damaged);
        if (n != 11) throw std::runtime_error("metrics csv: bad row: " + line);
        r.tick = tick;
        r.total_myelin = myelin;
        records.push_back(r);
    }
    if (first) throw std::runtime_error("metrics csv: empty input");
    return records;
}

std::string write_snapshot(const WorldState& w, bool annotate_energy) {
    const double hi = w.params.init_mye * (2.0 / 3.0);
    const double lo = w.params.init_mye * (1.0 / 3.0);
    std::string out;
    out.reserve(static_cast<std::size_t>(kGridExtent + 1) * kGridExtent);
    for (int y = kGridExtent - 1; y >= 0; --y) {
        for (int x = 0; x < kGridExtent; ++x) {
            const PatchState& p = w.grid.at(x, y);
            char c = 'B';
            switch (p.zone) {
                case Zone::Blood: c = 'B'; break;
                case Zone::Barrier: c = p.damaged ? '=' : '#'; break;
                case Zone::WhiteMatter:
                    if (p.myelin > hi)
                        c = '.';
                    else if (p.myelin > lo)
                        c = ':';
                    else if (p.myelin > 0.0)
                        c = ',';
                    else
                        c = 'X';
                    break;
            }
            out += c;
        }
        out += '\n';
    }
    if (annotate_energy) {
        char buf[160];
        for (const AgentState& a : w.agents) {
            if (!a.alive) continue;
            std::snprintf(buf, sizeof(buf), "%" PRIu64 ",%s,", a.id, breed_name(a.breed));
            out += buf;
            out += format_trimmed(a.pos.x, 3);
            out += ',';
            out += format_trimmed(a.pos.y, 3);
            out += ',';
            out += format_trimmed(a.energy, 3);
            out += '\n';
        }
    }
    return out;
}

const std::vector<std::string>& metric_series_names() {
    static const std::vector<std::string> names = {
        "virus",     "treg_rest",    "treg_act",      "teff_rest",   "teff_act",
        "cytokine",  "total_myelin", "recoverable",   "unrecoverable", "bbb_damaged",
    };
    return names;
}

namespace {

double series_value(const MetricsRecord& r, const std::string& name) {
    if (name == "virus") return r.n_virus;
    if (name == "treg_rest") return r.n_treg_rest;
    if (name == "treg_act") return r.n_treg_act;
    if (name == "teff_rest") return r.n_teff_rest;
    if (name == "teff_act") return r.n_teff_act;
    if (name == "cytokine") return r.n_cytokine;
    if (name == "total_myelin") return r.total_myelin;
    if (name == "recoverable") return r.recoverable;
    if (name == "unrecoverable") return r.unrecoverable;
    if (name == "bbb_damaged") return r.bbb_damaged;
    throw std::invalid_argument("unknown metric series: " + name);
}

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2",
};

} // namespace

std::string emit_plot(std::span<const MetricsRecord> records,
                      std::span<const std::string> series) {
    if (series.empty()) throw std::invalid_argument("no series selected");
    if (records.size() < 2) throw std::invalid_argument("need at least two records to plot");

    constexpr int kW = 960, kH = 540, kMarginL = 70, kMarginR = 150, kMarginT = 24, kMarginB = 46;
    const double plot_w = kW - kMarginL - kMarginR;
    const double plot_h = kH - kMarginT - kMarginB;

    double y_max = 0.0;
    for (const auto& r : records)
        for (const auto& name : series) y_max = std::max(y_max, series_value(r, name));
    if (y_max <= 0.0) y_max = 1.0;
    const double x_max = static_cast<double>(records.back().tick);
    const double x_span = x_max > 0.0 ? x_max : 1.0;

    auto px = [&](double t) { return kMarginL + plot_w * (t / x_span); };
    auto py = [&](double v) { return kMarginT + plot_h * (1.0 - v / y_max); };

    char buf[256];
    std::string svg;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n",
                  kW, kH, kW, kH);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", kMarginL,
                  kMarginT, kMarginL, kH - kMarginB);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" stroke=\"black\"/>\n", kMarginL,
                  kH - kMarginB, kW - kMarginR, kH - kMarginB);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\">tick</text>\n",
                  kMarginL + static_cast<int>(plot_w / 2), kH - 10);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"end\">%s</text>\n",
                  kMarginL - 6, kMarginT + 12, format_trimmed(y_max, 2).c_str());
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"end\">0</text>\n",
                  kMarginL - 6, kH - kMarginB);
    svg += buf;
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-size=\"12\" text-anchor=\"middle\">%s</text>\n",
                  kW - kMarginR, kH - kMarginB + 16, format_trimmed(x_max, 0).c_str());
    svg += buf;

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % std::size(kPalette)];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (const auto& r : records) {
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(static_cast<double>(r.tick)),
                          py(series_value(r, series[s])));
            svg += buf;
        }
        svg += "\"/>\n";
        const int ly = kMarginT + 16 + static_cast<int>(s) * 18;
        std::snprintf(buf, sizeof(buf),
                      "<rect x=\"%d\" y=\"%d\" width=\"12\" height=\"12\" fill=\"%s\"/>\n",
                      kW - kMarginR + 12, ly - 10, color);
        svg += buf;
        std::snprintf(buf, sizeof(buf), "<text x=\"%d\" y=\"%d\" font-size=\"12\">%s</text>\n",
                      kW - kMarginR + 30, ly, series[s].c_str());
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace mssim
