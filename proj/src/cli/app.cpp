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

#include "gkpkerr/cli/app.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gkpkerr/cli/commands.hpp"
#include "gkpkerr/cli/config.hpp"
#include "gkpkerr/errors.hpp"

#ifndef GKPKERR_VERSION
#define GKPKERR_VERSION "unknown"
#endif

namespace gkpkerr::cli {

namespace {

struct Subcommand {
    Command command;
    CLI::App *app = nullptr;
    std::map<std::string, std::string> values;
    std::string config_path;
};

void add_value(Subcommand &sub, const std::string &name, const std::string &help) {
    sub.app->add_option("--" + name, sub.values[name], help);
}

void add_options(Subcommand &sub) {
    const std::map<Command, std::vector<std::pair<std::string, std::string>>> specific{
        {Command::Codeword,
         {{"alpha", "coherent amplitude of the probe"},
          {"tau", "scaled interaction time"},
          {"x", "homodyne outcome (default 0)"},
          {"axis", "q or p (default q)"},
          {"grid-range", "lo:hi (default -3:3 for q, -30:30 for p)"},
          {"grid-points", "number of grid points (default 1201)"}}},
        {Command::SweepX,
         {{"alpha", "coherent amplitude"},
          {"x-range", "lo:hi (default -3:3)"},
          {"x-step", "grid step (default 0.01)"}}},
        {Command::SweepZ,
         {{"alpha", "comma-separated amplitudes"},
          {"z", "comma-separated z values"},
          {"z-grid", "list and/or log:lo:hi:count segments (default 0,log:1:100:60)"}}},
        {Command::SweepTau,
         {{"alpha", "coherent amplitude"},
          {"x", "homodyne outcome (default 0)"},
          {"tau-grid", "lo:hi:step (default 0.1:10:0.1)"}}},
        {Command::Validate,
         {{"tau", "tau for the asymptotic-consistency check (default 200)"},
          {"grid-range", "p range of the Fourier check (default -30:30)"},
          {"grid-points", "points of the Fourier check grid (default 1201)"}}},
    };
    for (const auto &[name, help] : specific.at(sub.command)) add_value(sub, name, help);
    add_value(sub, "preset", "fig3a (sweep-x), fig4 (codeword) or fig5 (sweep-z)");
    add_value(sub, "out", "output path (default: standard output)");
    add_value(sub, "format", "csv or json (default csv)");
    add_value(sub, "tolerance", "numerical tolerance override");
    add_value(sub, "threads", "worker threads; 0 = all hardware threads");
    sub.app->add_flag("--no-timestamp", "omit the timestamp from provenance");
    sub.app->add_option("--config", sub.config_path, "TOML file whose [defaults] table supplies missing flags");
}

std::map<std::string, std::string> explicit_flags(const Subcommand &sub) {
    std::map<std::string, std::string> flags;
    for (const auto &[name, value] : sub.values) {
        if (sub.app->count("--" + name) > 0) flags[name] = value;
    }
    if (sub.app->count("--no-timestamp") > 0) flags["no-timestamp"] = "true";
    return flags;
}

void emit(const RunConfig &config, std::ostream &out, const std::function<void(std::ostream &)> &writer) {
    if (!config.out) {
        writer(out);
        return;
    }
    // Render fully before touching the file so a failure leaves no partial output.
    std::ostringstream buffer;
    writer(buffer);
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + *config.out + "'");
    file << buffer.str();
    if (!file.flush()) throw ConfigError("failed writing '" + *config.out + "'");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Approximate GKP codewords from a cross-Kerr interaction and homodyne detection", "gkpkerr"};
    app.set_version_flag("--version", GKPKERR_VERSION);
    app.require_subcommand(1);
    std::vector<Subcommand> subs{
        {Command::Codeword, nullptr, {}, {}}, {Command::SweepX, nullptr, {}, {}}, {Command::SweepZ, nullptr, {}, {}},
        {Command::SweepTau, nullptr, {}, {}}, {Command::Validate, nullptr, {}, {}}};
    const std::map<Command, std::string> descriptions{
        {Command::Codeword, "densities of the four codewords on a q or p grid"},
        {Command::SweepX, "asymptotic error probabilities versus homodyne outcome x"},
        {Command::SweepZ, "success probability and mean intrinsic error versus z"},
        {Command::SweepTau, "finite-tau error probabilities versus tau"},
        {Command::Validate, "run the numerical self-checks"},
    };
    for (auto &sub : subs) {
        sub.app = app.add_subcommand(std::string(to_string(sub.command)), descriptions.at(sub.command));
        add_options(sub);
    }

    std::vector<std::string> argv(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << GKPKERR_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << (e.what()[0] ? e.what() : app.help());
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }

    for (auto &sub : subs) {
        if (!sub.app->parsed()) continue;
        try {
            const auto file_defaults =
                sub.config_path.empty() ? std::map<std::string, std::string>{} : read_config_file(sub.config_path);
            const RunConfig config = resolve_config(sub.command, explicit_flags(sub), file_defaults);
            if (config.command == Command::Validate) {
                const auto report = cmd_validate(config);
                emit(config, out, [&](std::ostream &o) { write_report(o, report); });
                return report.passed() ? kExitOk : kExitValidationFailure;
            }
            io::Dataset data;
            switch (config.command) {
                case Command::Codeword:
                    data = cmd_codeword(config);
                    break;
                case Command::SweepX:
                    data = cmd_sweep_x(config);
                    break;
                case Command::SweepZ:
                    data = cmd_sweep_z(config);
                    break;
                case Command::SweepTau:
                    data = cmd_sweep_tau(config);
                    break;
                case Command::Validate:
                    break;
            }
            emit(config, out, [&](std::ostream &o) { io::write(o, data, config.format); });
            return kExitOk;
        } catch (const ConfigError &e) {
            err << "configuration error: " << e.what() << '\n';
            return kExitConfigError;
        } catch (const std::invalid_argument &e) {
            err << "invalid parameter: " << e.what() << '\n';
            return kExitConfigError;
        } catch (const NumericalError &e) {
            err << "numerical failure: " << e.what() << '\n';
            return kExitNumericalFailure;
        } catch (const std::domain_error &e) {
            err << "numerical failure: " << e.what() << '\n';
            return kExitNumericalFailure;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return kExitNumericalFailure;
        }
    }
    err << "error: no subcommand given\n";
    return kExitConfigError;
}

}  // namespace gkpkerr::cli
