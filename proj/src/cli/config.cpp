// Copyright 2026 The gkpkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkpkerr/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <thread>

#include "toml.hpp"

namespace gkpkerr::cli {

namespace {

struct Preset {
    Command command;
    std::map<std::string, std::string> values;
};

const std::map<std::string, Preset> &presets() {
    static const std::map<std::string, Preset> table{
        {"fig3a", {Command::SweepX, {{"alpha", "1.5"}, {"x-range", "-3:3"}, {"x-step", "0.01"}}}},
        {"fig4", {Command::Codeword, {{"alpha", "2"}, {"tau", "2"}, {"x", "0"}}}},
        {"fig5", {Command::SweepZ, {{"alpha", "1,1.5,2,3,4,5"}}}},
    };
    return table;
}

// Flags each command accepts (besides config, out, format, no-timestamp,
// threads, tolerance and preset, which every command accepts).
const std::set<std::string> &accepted(Command command) {
    static const std::set<std::string> codeword{"alpha", "tau", "x", "axis", "grid-range", "grid-points"};
    static const std::set<std::string> sweep_x{"alpha", "x-range", "x-step"};
    static const std::set<std::string> sweep_z{"alpha", "z", "z-grid"};
    static const std::set<std::string> sweep_tau{"alpha", "x", "tau-grid"};
    static const std::set<std::string> validate{"tau", "grid-range", "grid-points"};
    switch (command) {
        case Command::Codeword:
            return codeword;
        case Command::SweepX:
            return sweep_x;
        case Command::SweepZ:
            return sweep_z;
        case Command::SweepTau:
            return sweep_tau;
        case Command::Validate:
            return validate;
    }
    throw std::logic_error("unreachable");
}

const std::set<std::string> kCommonKeys{"out", "format", "no-timestamp", "threads", "tolerance", "preset"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, std::string_view what) {
    text = trim(text);
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError("invalid number '" + std::string(text) + "' for " + std::string(what));
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

int parse_int(std::string_view text, std::string_view what) {
    text = trim(text);
    int value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw ConfigError("invalid integer '" + std::string(text) + "' for " + std::string(what));
    }
    return value;
}

bool parse_bool(std::string_view text, std::string_view what) {
    text = trim(text);
    if (text == "true" || text == "1") return true;
    if (text == "false" || text == "0") return false;
    throw ConfigError("invalid boolean '" + std::string(text) + "' for " + std::string(what));
}

void require_increasing(const std::vector<double> &values, std::string_view what) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) throw ConfigError(std::string(what) + " must be strictly increasing");
    }
}

std::vector<double> stepped_grid(double lo, double hi, double step, std::string_view what) {
    if (!(step > 0.0)) throw ConfigError(std::string(what) + ": step must be > 0");
    if (!(lo <= hi)) throw ConfigError(std::string(what) + ": lower bound exceeds upper bound");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 10'000'000) throw ConfigError(std::string(what) + ": too many grid points");
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = lo + double(i) * step;
    return grid;
}

std::string toml_to_text(const toml::node &node, const std::string &key) {
    if (const auto *v = node.as_floating_point()) {
        char buf[32];
        const auto result = std::to_chars(buf, buf + sizeof buf, v->get());
        return {buf, result.ptr};
    }
    if (const auto *v = node.as_integer()) return std::to_string(v->get());
    if (const auto *v = node.as_boolean()) return v->get() ? "true" : "false";
    if (const auto *v = node.as_string()) return v->get();
    if (const auto *arr = node.as_array()) {
        std::string joined;
        for (const auto &item : *arr) {
            if (item.is_array() || item.is_table()) throw ConfigError("config: nested value for '" + key + "'");
            joined += (joined.empty() ? "" : ",") + toml_to_text(item, key);
        }
        return joined;
    }
    throw ConfigError("config: unsupported value type for '" + key + "'");
}

}  // namespace

std::string_view to_string(Command command) {
    switch (command) {
        case Command::Codeword:
            return "codeword";
        case Command::SweepX:
            return "sweep-x";
        case Command::SweepZ:
            return "sweep-z";
        case Command::SweepTau:
            return "sweep-tau";
        case Command::Validate:
            return "validate";
    }
    return "?";
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
    std::vector<double> values;
    for (auto part : split(text, ',')) values.push_back(parse_number(part, what));
    return values;
}

std::pair<double, double> parse_range(std::string_view text, std::string_view what) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw ConfigError("expected lo:hi for " + std::string(what));
    const double lo = parse_number(parts[0], what);
    const double hi = parse_number(parts[1], what);
    if (!(lo < hi)) throw ConfigError(std::string(what) + ": lower bound must be below upper bound");
    return {lo, hi};
}

std::vector<double> parse_z_grid(std::string_view text) {
    std::vector<double> grid;
    for (auto part : split(text, ',')) {
        part = trim(part);
        if (part.starts_with("log:")) {
            const auto fields = split(part.substr(4), ':');
            if (fields.size() != 3) throw ConfigError("expected log:lo:hi:count in --z-grid");
            const double lo = parse_number(fields[0], "--z-grid");
            const double hi = parse_number(fields[1], "--z-grid");
            const int count = parse_int(fields[2], "--z-grid");
            if (!(lo > 0.0 && hi > lo) || count < 2) throw ConfigError("--z-grid: need 0 < lo < hi and count >= 2");
            for (int i = 0; i < count; ++i) {
                grid.push_back(lo * std::pow(hi / lo, double(i) / double(count - 1)));
            }
            grid.back() = hi;
        } else {
            grid.push_back(parse_number(part, "--z-grid"));
        }
    }
    require_increasing(grid, "--z-grid");
    return grid;
}

std::vector<double> RunConfig::x_grid() const { return stepped_grid(x_lo, x_hi, x_step, "--x-range"); }

std::vector<double> RunConfig::coordinate_grid() const {
    std::vector<double> grid(static_cast<std::size_t>(grid_points));
    if (grid_points == 1) {
        grid[0] = grid_lo;
        return grid;
    }
    for (int i = 0; i < grid_points; ++i) {
        grid[std::size_t(i)] = grid_lo + (grid_hi - grid_lo) * double(i) / double(grid_points - 1);
    }
    return grid;
}

std::vector<double> RunConfig::tau_grid() const {
    auto grid = stepped_grid(tau_lo, tau_hi, tau_step, "--tau-grid");
    if (grid.front() <= 0.0) throw ConfigError("--tau-grid: tau must be > 0");
    return grid;
}

unsigned RunConfig::worker_count() const {
    return threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
}

std::map<std::string, std::string> read_config_file(const std::string &path) {
    toml::table doc;
    try {
        doc = toml::parse_file(path);
    } catch (const toml::parse_error &e) {
        throw ConfigError("config " + path + ": " + std::string(e.description()));
    }
    std::map<std::string, std::string> values;
    for (const auto &[key, node] : doc) {
        if (key.str() != "defaults") throw ConfigError("config " + path + ": unknown table '" + std::string(key.str()) + "'");
    }
    const auto *defaults = doc["defaults"].as_table();
    if (defaults == nullptr) {
        if (doc.contains("defaults")) throw ConfigError("config " + path + ": 'defaults' must be a table");
        return values;
    }
    for (const auto &[key, node] : *defaults) {
        const std::string name(key.str());
        if (name == "config") throw ConfigError("config " + path + ": 'config' cannot be set from a config file");
        values[name] = toml_to_text(node, name);
    }
    return values;
}

RunConfig resolve_config(Command command, const std::map<std::string, std::string> &flags,
                         const std::map<std::string, std::string> &file_defaults) {
    const auto &allowed = accepted(command);
    auto known = [&](const std::string &key) { return allowed.count(key) > 0 || kCommonKeys.count(key) > 0; };
    for (const auto &[key, value] : flags) {
        if (!known(key)) {
            throw ConfigError("flag --" + key + " does not apply to '" + std::string(to_string(command)) + "'");
        }
    }

    // Precedence: explicit flags, then the preset, then the config file.
    std::map<std::string, std::string> merged;
    for (const auto &[key, value] : file_defaults) {
        if (known(key)) merged[key] = value;
    }
    const auto preset_it = flags.find("preset");
    const std::string preset_name =
        preset_it != flags.end() ? preset_it->second : (merged.count("preset") ? merged["preset"] : "");
    if (!preset_name.empty()) {
        const auto found = presets().find(preset_name);
        if (found == presets().end()) throw ConfigError("unknown preset '" + preset_name + "'");
        if (found->second.command != command) {
            throw ConfigError("preset '" + preset_name + "' belongs to '" +
                              std::string(to_string(found->second.command)) + "'");
        }
        for (const auto &[key, value] : found->second.values) merged[key] = value;
    }
    for (const auto &[key, value] : flags) merged[key] = value;

    RunConfig config;
    config.command = command;
    config.raw = merged;
    if (!preset_name.empty()) config.preset = preset_name;
    auto get = [&](const std::string &key) -> const std::string * {
        const auto it = merged.find(key);
        return it == merged.end() ? nullptr : &it->second;
    };

    if (const auto *v = get("alpha")) config.alpha = parse_list(*v, "--alpha");
    if (const auto *v = get("tau")) config.tau = parse_list(*v, "--tau");
    if (const auto *v = get("x")) config.x = parse_list(*v, "--x");
    if (flags.count("z") && flags.count("z-grid")) throw ConfigError("--z and --z-grid are mutually exclusive");
    // An explicit --z list wins; a file-level z only applies when no --z-grid flag is given.
    const bool use_z_list = flags.count("z") > 0 || (flags.count("z-grid") == 0 && merged.count("z") > 0);
    if (use_z_list) {
        config.z = parse_list(*get("z"), "--z");
        require_increasing(config.z, "--z");
    } else {
        config.z = parse_z_grid(get("z-grid") ? *get("z-grid") : "0,log:1:100:60");
    }
    if (const auto *v = get("x-range")) std::tie(config.x_lo, config.x_hi) = parse_range(*v, "--x-range");
    if (const auto *v = get("x-step")) config.x_step = parse_number(*v, "--x-step");
    if (const auto *v = get("axis")) {
        if (*v == "q") {
            config.axis = analysis::Axis::Q;
        } else if (*v == "p") {
            config.axis = analysis::Axis::P;
        } else {
            throw ConfigError("--axis must be q or p");
        }
    }
    const bool p_grid = config.axis == analysis::Axis::P || command == Command::Validate;
    config.grid_lo = p_grid ? -30.0 : -3.0;
    config.grid_hi = p_grid ? 30.0 : 3.0;
    if (const auto *v = get("grid-range")) std::tie(config.grid_lo, config.grid_hi) = parse_range(*v, "--grid-range");
    if (const auto *v = get("grid-points")) config.grid_points = parse_int(*v, "--grid-points");
    if (config.grid_points < 1) throw ConfigError("empty grid: --grid-points must be >= 1");
    if (const auto *v = get("tau-grid")) {
        const auto parts = split(*v, ':');
        if (parts.size() != 3) throw ConfigError("expected lo:hi:step for --tau-grid");
        config.tau_lo = parse_number(parts[0], "--tau-grid");
        config.tau_hi = parse_number(parts[1], "--tau-grid");
        config.tau_step = parse_number(parts[2], "--tau-grid");
    }
    if (const auto *v = get("tolerance")) {
        config.tolerance = parse_number(*v, "--tolerance");
        if (!(*config.tolerance > 0.0)) throw ConfigError("--tolerance must be > 0");
    }
    if (const auto *v = get("out")) config.out = *v;
    if (const auto *v = get("format")) {
        try {
            config.format = io::parse_format(*v);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    if (const auto *v = get("no-timestamp")) config.timestamp = !parse_bool(*v, "--no-timestamp");
    if (const auto *v = get("threads")) {
        const int threads = parse_int(*v, "--threads");
        if (threads < 0) throw ConfigError("--threads must be >= 0");
        config.threads = unsigned(threads);
    }

    // Per-command requirements, checked before any computation.
    auto single = [](const std::vector<double> &values, const char *flag) {
        if (values.size() != 1) throw ConfigError(std::string(flag) + " takes exactly one value for this command");
        return values[0];
    };
    auto require = [](const std::vector<double> &values, const char *flag) {
        if (values.empty()) throw ConfigError(std::string(flag) + " is required");
    };
    auto check_alpha = [](double a) {
        if (!(a >= 0.0)) throw ConfigError("--alpha must be >= 0");
    };
    switch (command) {
        case Command::Codeword:
            require(config.alpha, "--alpha");
            require(config.tau, "--tau");
            if (config.x.empty()) config.x = {0.0};
            check_alpha(single(config.alpha, "--alpha"));
            if (!(single(config.tau, "--tau") > 0.0)) throw ConfigError("--tau must be > 0");
            single(config.x, "--x");
            break;
        case Command::SweepX:
            require(config.alpha, "--alpha");
            check_alpha(single(config.alpha, "--alpha"));
            config.x_grid();
            break;
        case Command::SweepZ:
            require(config.alpha, "--alpha");
            for (double a : config.alpha) check_alpha(a);
            if (config.z.empty()) throw ConfigError("empty z grid");
            for (double z : config.z) {
                if (!(z >= 0.0)) throw ConfigError("z values must be >= 0");
            }
            break;
        case Command::SweepTau:
            require(config.alpha, "--alpha");
            if (config.x.empty()) config.x = {0.0};
            check_alpha(single(config.alpha, "--alpha"));
            single(config.x, "--x");
            config.tau_grid();
            break;
        case Command::Validate:
            if (config.tau.empty()) config.tau = {200.0};
            if (!(single(config.tau, "--tau") > 0.0)) throw ConfigError("--tau must be > 0");
            break;
    }
    return config;
}

}  // namespace gkpkerr::cli
