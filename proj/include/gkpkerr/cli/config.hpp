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

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gkpkerr/analysis/regions.hpp"
#include "gkpkerr/io/dataset.hpp"

namespace gkpkerr::cli {

/// Bad flags, bad config files, or parameters outside their domain.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Command { Codeword, SweepX, SweepZ, SweepTau, Validate };

std::string_view to_string(Command command);

/// Fully resolved and validated parameters of one invocation.
struct RunConfig {
    Command command = Command::Validate;
    std::optional<std::string> preset;

    std::vector<double> alpha;
    std::vector<double> tau;
    std::vector<double> x;
    std::vector<double> z;  // explicit --z values, or the expanded --z-grid

    double x_lo = -3.0;
    double x_hi = 3.0;
    double x_step = 0.01;

    analysis::Axis axis = analysis::Axis::Q;
    double grid_lo = -3.0;
    double grid_hi = 3.0;
    int grid_points = 1201;

    double tau_lo = 0.1;
    double tau_hi = 10.0;
    double tau_step = 0.1;

    std::optional<double> tolerance;
    std::optional<std::string> out;
    io::Format format = io::Format::Csv;
    bool timestamp = true;
    unsigned threads = 0;  // 0: one per hardware thread

    /// Raw (key, value) pairs as merged from the config file and flags,
    /// in key order; recorded verbatim in provenance.
    std::map<std::string, std::string> raw;

    /// The x grid lo, lo + step, ..., hi (inclusive up to rounding).
    std::vector<double> x_grid() const;
    /// The coordinate grid for the codeword command.
    std::vector<double> coordinate_grid() const;
    /// The tau grid for sweep-tau.
    std::vector<double> tau_grid() const;
    unsigned worker_count() const;
};

/// Builds a RunConfig from the subcommand name and the raw flag values.
/// `flags` holds explicitly given flags; `file_defaults` holds values from
/// the [defaults] table of a config file and is consulted only for keys
/// absent from `flags`. Throws ConfigError.
RunConfig resolve_config(Command command, const std::map<std::string, std::string> &flags,
                         const std::map<std::string, std::string> &file_defaults);

/// Reads the [defaults] table of a TOML file into flag-name -> text pairs.
/// Arrays are joined with commas. Throws ConfigError.
std::map<std::string, std::string> read_config_file(const std::string &path);

/// Parsers for list and range syntaxes; throw ConfigError.
std::vector<double> parse_list(std::string_view text, std::string_view what);
/// "lo:hi" -> {lo, hi}
std::pair<double, double> parse_range(std::string_view text, std::string_view what);
/// "log:lo:hi:count" or a comma list.
std::vector<double> parse_z_grid(std::string_view text);

}  // namespace gkpkerr::cli
