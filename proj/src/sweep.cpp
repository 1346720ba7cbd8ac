#include "mssim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <thread>

namespace mssim {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> parse_list(std::string_view body, std::size_t line_no) {
    std::vector<std::string> values;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        const std::string item{trim(body.substr(pos, comma - pos))};
        if (item.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty list element");
        values.push_back(item);
        if (comma == body.size()) break;
        pos = comma + 1;
    }
    return values;
}

bool is_axis_key(const std::string& key) {
    if (key == "scenario") return true;
    const auto& keys = config_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

int parse_scenario_value(const std::string& v) {
    char* end = nullptr;
    const long id = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("scenario value is not an integer: " + v);
    preset(static_cast<int>(id)); // range check
    return static_cast<int>(id);
}

} // namespace

SweepSpec parse_sweep_spec(std::string_view text) {
    SweepSpec spec;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::optional<int> scalar_scenario;

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};

        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated list");
            if (!is_axis_key(key))
                throw ConfigError("line " + std::to_string(line_no) + ": unknown axis key '" +
                                  key + "'");
            auto values = parse_list(value.substr(1, value.size() - 2), line_no);
            // validate values now so errors carry the line number
            for (const auto& v : values) {
                if (key == "scenario") {
                    parse_scenario_value(v);
                } else {
                    SimParams probe;
                    set_config_value(probe, key, v);
                }
            }
            spec.axes.emplace_back(key, std::move(values));
        } else if (key == "replicates") {
            char* end = nullptr;
            const long n = std::strtol(value.c_str(), &end, 10);
            if (end == value.c_str() || *end != '\0' || n < 1)
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": replicates must be a positive integer");
            spec.replicates = static_cast<int>(n);
        } else if (key == "base_seed") {
            char* end = nullptr;
            const unsigned long long s = std::strtoull(value.c_str(), &end, 10);
            if (end == value.c_str() || *end != '\0')
                throw ConfigError("line " + std::to_string(line_no) +
                                  ": base_seed must be an integer");
            spec.base_seed = s;
        } else if (key == "scenario") {
            scalar_scenario = parse_scenario_value(value);
        } else {
            set_config_value(spec.base, key, value); // throws on unknown key
            spec.overrides.emplace_back(key, value);
        }
    }

    if (scalar_scenario) {
        SimParams p = preset(*scalar_scenario);
        for (const auto& [k, v] : spec.overrides) set_config_value(p, k, v);
        spec.base = p;
    }

    std::sort(spec.axes.begin(), spec.axes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < spec.axes.size(); ++i)
        if (spec.axes[i].first == spec.axes[i - 1].first)
            throw ConfigError("duplicate axis key '" + spec.axes[i].first + "'");

    spec.ticks = spec.base.ticks;
    return spec;
}

std::vector<RunPlan> expand_sweep(const SweepSpec& spec) {
    std::size_t cells = 1;
    for (const auto& [key, values] : spec.axes) {
        if (values.empty()) throw ConfigError("axis '" + key + "' has no values");
        cells *= values.size();
    }

    std::vector<RunPlan> plans;
    plans.reserve(cells * static_cast<std::size_t>(spec.replicates));
    std::vector<std::size_t> cursor(spec.axes.size(), 0);

    for (std::size_t c = 0; c < cells; ++c) {
        // decode cursor for cell c, last axis fastest
        std::size_t rem = c;
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            cursor[a] = rem % spec.axes[a].second.size();
            rem /= spec.axes[a].second.size();
        }

        SimParams params = spec.base;
        std::map<std::string, std::string> cell;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            const auto& [key, values] = spec.axes[a];
            const std::string& value = values[cursor[a]];
            cell[key] = value;
            if (key == "scenario") {
                params = preset(parse_scenario_value(value));
                for (const auto& [k, v] : spec.overrides) set_config_value(params, k, v);
            }
        }
        // non-scenario axis values land on top of any preset
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            const auto& [key, values] = spec.axes[a];
            if (key == "scenario") continue;
            set_config_value(params, key, values[cursor[a]]);
        }

        for (int rep = 0; rep < spec.replicates; ++rep) {
            RunPlan plan;
            plan.index = plans.size();
            plan.cell = cell;
            plan.replicate = rep;
            plan.seed = spec.base_seed + plan.index;
            plan.params = params;
            plan.params.master_seed = plan.seed;
            plan.params.ticks = spec.ticks;
            if (auto violations = validate(plan.params); !violations.empty()) {
                std::string msg = "sweep cell produces invalid parameters:";
                for (const auto& v : violations) msg += " [" + v + "]";
                throw ConfigError(msg);
            }
            plans.push_back(std::move(plan));
        }
    }
    return plans;
}

namespace {

RunResult execute_plan(const RunPlan& plan,
                       const std::function<void(const RunPlan&, const RunOutput&)>& sink) {
    RunResult res;
    res.index = plan.index;
    res.cell = plan.cell;
    res.replicate = plan.replicate;
    res.seed = plan.seed;
    try {
        const RunOutput out = run(plan.params, plan.params.ticks);
        res.final_record = out.records.back();
        for (const auto& r : out.records) {
            res.peak_teff_act = std::max(res.peak_teff_act, r.n_teff_act);
            if (!res.first_unrecoverable_tick && r.unrecoverable > 0)
                res.first_unrecoverable_tick = r.tick;
        }
        if (sink) sink(plan, out);
    } catch (const std::exception& e) {
        res.error = e.what();
    }
    return res;
}

std::string cell_label(const std::map<std::string, std::string>& cell) {
    if (cell.empty()) return "-";
    std::string out;
    for (const auto& [k, v] : cell) {
        if (!out.empty()) out += ';';
        out += k + "=" + v;
    }
    return out;
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return (n % 2 == 1) ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

} // namespace

std::string aggregate_csv(const std::vector<RunResult>& results) {
    std::string out =
        "cell,runs,failures,median_unrecoverable,min_unrecoverable,max_unrecoverable,"
        "median_peak_teff_act,min_peak_teff_act,max_peak_teff_act\n";

    // group by cell, preserving first-appearance (enumeration) order
    std::vector<std::pair<std::string, std::vector<const RunResult*>>> groups;
    for (const auto& r : results) {
        const std::string label = cell_label(r.cell);
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == label; });
        if (it == groups.end()) {
            groups.emplace_back(label, std::vector<const RunResult*>{});
            it = std::prev(groups.end());
        }
        it->second.push_back(&r);
    }

    for (const auto& [label, runs] : groups) {
        std::vector<double> unrec, peak;
        int failures = 0;
        for (const RunResult* r : runs) {
            if (!r->error.empty()) {
                ++failures;
                continue;
            }
            unrec.push_back(r->final_record.unrecoverable);
            peak.push_back(r->peak_teff_act);
        }
        out += label;
        out += ',' + std::to_string(unrec.size());
        out += ',' + std::to_string(failures);
        if (unrec.empty()) {
            out += ",,,,,,\n";
            continue;
        }
        const auto [unrec_min, unrec_max] = std::minmax_element(unrec.begin(), unrec.end());
        const auto [peak_min, peak_max] = std::minmax_element(peak.begin(), peak.end());
        out += ',' + format_trimmed(median(unrec), 2);
        out += ',' + format_trimmed(*unrec_min, 0);
        out += ',' + format_trimmed(*unrec_max, 0);
        out += ',' + format_trimmed(median(peak), 2);
        out += ',' + format_trimmed(*peak_min, 0);
        out += ',' + format_trimmed(*peak_max, 0);
        out += '\n';
    }
    return out;
}

SweepOutcome run_sweep(const SweepSpec& spec, int parallelism,
                       const std::function<void(const RunPlan&, const RunOutput&)>& sink) {
    if (parallelism < 1) throw ConfigError("parallelism must be >= 1");
    const std::vector<RunPlan> plans = expand_sweep(spec);

    SweepOutcome outcome;
    outcome.results.resize(plans.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= plans.size()) break;
            outcome.results[i] = execute_plan(plans[i], sink);
        }
    };

    if (parallelism == 1 || plans.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        const int n = std::min<std::size_t>(parallelism, plans.size());
        threads.reserve(n);
        for (int t = 0; t < n; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    outcome.aggregate_csv = aggregate_csv(outcome.results);
    return outcome;
}

} // namespace mssim
