#include "mssim/config.hpp"

#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace mssim {

namespace {

enum class FieldKind { Int, Double, U64, Bool };

struct FieldDef {
    const char* key;
    FieldKind kind;
    void* (*ptr)(SimParams&);
};

template <typename T, T SimParams::* Member>
void* member_ptr(SimParams& p) {
    return &(p.*Member);
}

// Canonical key order; serialize_config and `presets` follow it.
const FieldDef kFields[] = {
    {"init_treg_n", FieldKind::Int, member_ptr<int, &SimParams::init_treg_n>},
    {"treg_life", FieldKind::Double, member_ptr<double, &SimParams::treg_life>},
    {"treg_repro_pct", FieldKind::Double, member_ptr<double, &SimParams::treg_repro_pct>},
    {"treg_radius", FieldKind::Double, member_ptr<double, &SimParams::treg_radius>},
    {"init_teff_n", FieldKind::Int, member_ptr<int, &SimParams::init_teff_n>},
    {"teff_life", FieldKind::Double, member_ptr<double, &SimParams::teff_life>},
    {"teff_repro_pct", FieldKind::Double, member_ptr<double, &SimParams::teff_repro_pct>},
    {"init_virus_n", FieldKind::Int, member_ptr<int, &SimParams::init_virus_n>},
    {"v_energy", FieldKind::Double, member_ptr<double, &SimParams::v_energy>},
    {"v_radius", FieldKind::Double, member_ptr<double, &SimParams::v_radius>},
    {"mimicry", FieldKind::Double, member_ptr<double, &SimParams::mimicry>},
    {"master_seed", FieldKind::U64, member_ptr<std::uint64_t, &SimParams::master_seed>},
    {"show_energy", FieldKind::Bool, member_ptr<bool, &SimParams::show_energy>},
    {"disable_treg", FieldKind::Bool, member_ptr<bool, &SimParams::disable_treg>},
    {"init_mye", FieldKind::Double, member_ptr<double, &SimParams::init_mye>},
    {"ate_mye", FieldKind::Double, member_ptr<double, &SimParams::ate_mye>},
    {"rec_mye", FieldKind::Double, member_ptr<double, &SimParams::rec_mye>},
    {"mye_regrow_time", FieldKind::Int, member_ptr<int, &SimParams::mye_regrow_time>},
    {"bbb_countdown", FieldKind::Int, member_ptr<int, &SimParams::bbb_countdown>},
    {"cytokine_energy", FieldKind::Double, member_ptr<double, &SimParams::cytokine_energy>},
    {"cytokine_n", FieldKind::Int, member_ptr<int, &SimParams::cytokine_n>},
    {"hill1", FieldKind::Double, member_ptr<double, &SimParams::hill1>},
    {"hill2", FieldKind::Double, member_ptr<double, &SimParams::hill2>},
    {"patch_density", FieldKind::Int, member_ptr<int, &SimParams::patch_density>},
    {"mean_treg", FieldKind::Double, member_ptr<double, &SimParams::mean_treg>},
    {"kill_energy_gain", FieldKind::Double, member_ptr<double, &SimParams::kill_energy_gain>},
    {"influx_prob", FieldKind::Double, member_ptr<double, &SimParams::influx_prob>},
    {"ticks", FieldKind::U64, member_ptr<std::uint64_t, &SimParams::ticks>},
    {"grid_extent", FieldKind::Int, member_ptr<int, &SimParams::grid_extent>},
};

const FieldDef* find_field(std::string_view key) {
    for (const auto& f : kFields) {
        if (key == f.key) return &f;
    }
    return nullptr;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool parse_bool(std::string_view v, bool& out) {
    if (v == "true" || v == "on" || v == "1") { out = true; return true; }
    if (v == "false" || v == "off" || v == "0") { out = false; return true; }
    return false;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void assign_field(SimParams& p, const FieldDef& f, const std::string& value) {
    const std::string v{trim(value)};
    const char* begin = v.c_str();
    char* end = nullptr;
    switch (f.kind) {
        case FieldKind::Int: {
            const long parsed = std::strtol(begin, &end, 10);
            if (end == begin || *end != '\0')
                throw ConfigError("value for '" + std::string(f.key) + "' is not an integer: " + v);
            *static_cast<int*>(f.ptr(p)) = static_cast<int>(parsed);
            break;
        }
        case FieldKind::U64: {
            if (!v.empty() && v[0] == '-')
                throw ConfigError("value for '" + std::string(f.key) + "' must be non-negative: " + v);
            const unsigned long long parsed = std::strtoull(begin, &end, 10);
            if (end == begin || *end != '\0')
                throw ConfigError("value for '" + std::string(f.key) + "' is not an integer: " + v);
            *static_cast<std::uint64_t*>(f.ptr(p)) = parsed;
            break;
        }
        case FieldKind::Double: {
            const double parsed = std::strtod(begin, &end);
            if (end == begin || *end != '\0' || !std::isfinite(parsed))
                throw ConfigError("value for '" + std::string(f.key) + "' is not a number: " + v);
            *static_cast<double*>(f.ptr(p)) = parsed;
            break;
        }
        case FieldKind::Bool: {
            bool parsed = false;
            if (!parse_bool(v, parsed))
                throw ConfigError("value for '" + std::string(f.key) + "' is not a boolean: " + v);
            *static_cast<bool*>(f.ptr(p)) = parsed;
            break;
        }
    }
}

std::string read_field(const SimParams& p, const FieldDef& f) {
    auto& mut = const_cast<SimParams&>(p);
    switch (f.kind) {
        case FieldKind::Int:
            return std::to_string(*static_cast<int*>(f.ptr(mut)));
        case FieldKind::U64:
            return std::to_string(*static_cast<std::uint64_t*>(f.ptr(mut)));
        case FieldKind::Double:
            return fmt_double(*static_cast<double*>(f.ptr(mut)));
        case FieldKind::Bool:
            return *static_cast<bool*>(f.ptr(mut)) ? "true" : "false";
    }
    return {};
}

} // namespace

SimParams preset(int id) {
    SimParams p; // defaults == simulation 1
    switch (id) {
        case 1:
            break;
        case 2: // weak Tregs
            p.init_treg_n = 50;
            p.treg_life = 30.0;
            p.treg_repro_pct = 12.0;
            p.treg_radius = 2.0;
            break;
        case 3: // weak Teffs
            p.init_teff_n = 50;
            p.teff_life = 30.0;
            p.teff_repro_pct = 12.0;
            break;
        case 4: // no regrowth, heavy attacks
            p.ate_mye = 5.0;
            p.mye_regrow_time = 0;
            break;
        case 5: // weak Tregs and no regrowth
            p.init_treg_n = 50;
            p.treg_life = 30.0;
            p.treg_repro_pct = 12.0;
            p.treg_radius = 2.0;
            p.ate_mye = 5.0;
            p.mye_regrow_time = 0;
            break;
        case 6: // low viral attack, weak cytokines
            p.init_virus_n = 50;
            p.v_energy = 10.0;
            p.v_radius = 2.0;
            p.cytokine_energy = 12.0;
            p.patch_density = 1;
            break;
        default:
            throw ConfigError("scenario id out of range (1..6): " + std::to_string(id));
    }
    return p;
}

SimParams parse_config(std::string_view text) {
    SimParams p;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
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
        const FieldDef* field = find_field(key);
        if (field == nullptr)
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        assign_field(p, *field, value);
    }

    if (auto violations = validate(p); !violations.empty()) {
        std::string msg = "config out of range:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw ConfigError(msg);
    }
    return p;
}

std::string serialize_config(const SimParams& p) {
    std::string out;
    for (const auto& f : kFields) {
        out += f.key;
        out += " = ";
        out += read_field(p, f);
        out += '\n';
    }
    return out;
}

std::vector<std::string> validate(const SimParams& p) {
    std::vector<std::string> v;
    auto check = [&v](bool ok, const char* rule) {
        if (!ok) v.emplace_back(rule);
    };
    check(p.init_treg_n >= 0, "init_treg_n >= 0");
    check(p.init_teff_n >= 0, "init_teff_n >= 0");
    check(p.init_virus_n >= 0, "init_virus_n >= 0");
    check(p.treg_life >= 0.0, "treg_life >= 0");
    check(p.teff_life >= 0.0, "teff_life >= 0");
    check(p.v_energy >= 0.0, "v_energy >= 0");
    check(p.cytokine_energy >= 0.0, "cytokine_energy >= 0");
    check(p.treg_repro_pct >= 0.0 && p.treg_repro_pct <= 100.0, "treg_repro_pct in [0,100]");
    check(p.teff_repro_pct >= 0.0 && p.teff_repro_pct <= 100.0, "teff_repro_pct in [0,100]");
    check(p.treg_radius >= 0.0, "treg_radius >= 0");
    check(p.v_radius >= 0.0, "v_radius >= 0");
    check(p.mimicry >= 0.0 && p.mimicry <= 1.0, "mimicry in [0,1]");
    check(p.influx_prob >= 0.0 && p.influx_prob <= 1.0, "influx_prob in [0,1]");
    check(p.init_mye > 0.0, "init_mye > 0");
    check(p.ate_mye > 0.0, "ate_mye > 0");
    check(p.rec_mye >= 0.0, "rec_mye >= 0");
    check(p.mye_regrow_time >= 0, "mye_regrow_time >= 0");
    check(p.bbb_countdown >= 0, "bbb_countdown >= 0");
    check(p.cytokine_n >= 0, "cytokine_n >= 0");
    check(p.hill1 >= 1.0, "hill1 >= 1");
    check(p.hill2 >= 1.0, "hill2 >= 1");
    check(p.patch_density >= 1, "patch_density >= 1");
    check(p.mean_treg >= 0.0, "mean_treg >= 0");
    check(p.kill_energy_gain >= 0.0, "kill_energy_gain >= 0");
    check(p.grid_extent == 51, "grid_extent = 51");
    return v;
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : kFields) k.emplace_back(f.key);
        return k;
    }();
    return keys;
}

void set_config_value(SimParams& p, const std::string& key, const std::string& value) {
    const FieldDef* field = find_field(key);
    if (field == nullptr) throw ConfigError("unknown key '" + key + "'");
    assign_field(p, *field, value);
}

std::string get_config_value(const SimParams& p, const std::string& key) {
    const FieldDef* field = find_field(key);
    if (field == nullptr) throw ConfigError("unknown key '" + key + "'");
    return read_field(p, *field);
}

} // namespace mssim
