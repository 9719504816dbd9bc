// Copyright 2026 The qproc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qproc/error.hpp"
#include "qproc/experiments.hpp"

namespace ex = qproc::experiments;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Explicit --out wins, then $QPROC_OUT_DIR/<fallback>, then stdout.
std::optional<fs::path> resolve_out(const std::string &out, const std::string &fallback) {
    if (!out.empty() && out != "-") {
        return fs::path(out);
    }
    if (out.empty()) {
        if (const char *dir = std::getenv("QPROC_OUT_DIR"); dir != nullptr && *dir != '\0') {
            return fs::path(dir) / fallback;
        }
    }
    return std::nullopt;
}

void emit(const std::optional<fs::path> &path, const std::string &text) {
    if (!path) {
        std::cout << text;
        return;
    }
    if (path->has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path->parent_path(), ec);
    }
    std::ofstream f(*path, std::ios::binary);
    f << text;
    f.close();
    if (!f) {
        throw IoError("cannot write " + path->string());
    }
    std::cerr << "wrote " << path->string() << '\n';
}

ex::Json read_json(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw qproc::InvalidParameter("cannot read config " + path);
    }
    try {
        return ex::Json::parse(f);
    } catch (const ex::Json::exception &e) {
        throw qproc::InvalidParameter("config " + path + " is not valid JSON: " + e.what());
    }
}

void apply_params(ex::ExperimentConfig &c, const std::vector<std::string> &params) {
    for (const auto &kv : params) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw qproc::InvalidParameter("--param expects name=value, got '" + kv + "'");
        }
        std::istringstream in(kv.substr(eq + 1));
        in.imbue(std::locale::classic());
        double v = 0.0;
        if (!(in >> v) || !in.eof()) {
            throw qproc::InvalidParameter("--param value is not a number: '" + kv + "'");
        }
        c.params[kv.substr(0, eq)] = v;
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulate probabilistic programmable quantum processors and conditional loops."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qproc 0.1.0");

    auto *verify = app.add_subcommand("verify", "Run the built-in invariant suites.");
    bool inject_fault = false;
    verify->add_flag("--inject-fault", inject_fault)->group("");

    auto *reproduce = app.add_subcommand("reproduce", "Write a reference table as CSV.");
    std::string table;
    std::string out;
    double tol = 1e-9;
    reproduce->add_option("--table", table, "Table name or 'all'")->required();
    reproduce->add_option("--out", out, "Output file ('-' for stdout)");
    reproduce->add_option("--tol", tol, "Allowed deviation for unflagged rows")->check(CLI::PositiveNumber);

    auto *sweep = app.add_subcommand("sweep", "Evaluate an experiment over a parameter grid.");
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    sweep->add_option("--config", config_path, "Sweep config (JSON)")->required();
    sweep->add_option("--out", out, "Output file ('-' for stdout)");
    sweep->add_option("--seed", seed, "Master seed for sampled sweeps");
    sweep->add_option("--trials", trials, "Monte Carlo trials per grid point");

    auto *sample = app.add_subcommand("sample", "Monte Carlo sampling of loop trajectories.");
    std::string experiment;
    std::vector<std::string> params;
    std::optional<std::size_t> rounds;
    bool no_traces = false;
    std::optional<double> sample_tol;
    sample->add_option("--config", config_path, "Experiment config (JSON)");
    sample->add_option("--experiment", experiment, "Experiment id (see 'list')");
    sample->add_option("--param", params, "Family parameter name=value (repeatable)");
    sample->add_option("--rounds", rounds, "Maximum loop rounds");
    sample->add_option("--seed", seed, "Master seed");
    sample->add_option("--trials", trials, "Number of trajectories");
    sample->add_option("--tol", sample_tol, "Proportionality tolerance");
    sample->add_option("--out", out, "Output file ('-' for stdout)");
    sample->add_flag("--no-traces", no_traces, "Write only config and summary");

    auto *list = app.add_subcommand("list", "List experiments and tables.");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify) {
            const auto report = ex::verify({inject_fault});
            ex::print_report(std::cout, report);
            return report.passed() ? kOk : kFailed;
        }
        if (*list) {
            std::cout << "experiments:";
            for (const auto &n : ex::experiment_names()) {
                std::cout << ' ' << n;
            }
            std::cout << "\ntables:";
            for (const auto &n : ex::table_names()) {
                std::cout << ' ' << n;
            }
            std::cout << '\n';
            return kOk;
        }
        if (*reproduce) {
            std::vector<ex::ResultRow> rows;
            if (table == "all") {
                for (const auto &t : ex::table_names()) {
                    for (auto r : ex::reproduce(t)) {
                        r.quantity = t + ": " + r.quantity;
                        rows.push_back(std::move(r));
                    }
                }
            } else {
                rows = ex::reproduce(table);
            }
            std::ostringstream csv;
            ex::write_csv(csv, rows);
            emit(resolve_out(out, "reproduce_" + table + ".csv"), csv.str());
            const auto bad = ex::unexplained(rows, tol);
            for (const auto &r : bad) {
                std::cerr << "deviation " << ex::format_double(*r.deviation) << " exceeds tolerance: " << r.quantity
                          << " [" << r.params << "]\n";
            }
            return bad.empty() ? kOk : kFailed;
        }
        if (*sweep) {
            ex::Json j = read_json(config_path);
            if (seed) {
                j["seed"] = *seed;
            }
            if (trials) {
                j["trials"] = *trials;
            }
            const auto s = ex::sweep_from_json(j);
            std::ostringstream csv;
            ex::write_csv(csv, ex::sweep(s));
            emit(resolve_out(out, "sweep_" + s.base.experiment + ".csv"), csv.str());
            return kOk;
        }
        if (*sample) {
            ex::ExperimentConfig c;
            if (!config_path.empty()) {
                c = ex::config_from_json(read_json(config_path));
            } else if (experiment.empty()) {
                std::cerr << "sample needs --config or --experiment\n";
                return kUsage;
            }
            if (!experiment.empty()) {
                c.experiment = experiment;
            }
            apply_params(c, params);
            if (rounds) {
                c.rounds = *rounds;
            }
            if (seed) {
                c.seed = *seed;
            }
            if (trials) {
                c.trials = *trials;
            }
            if (sample_tol) {
                c.tol = *sample_tol;
            }
            if (no_traces) {
                c.keep_traces = false;
            }
            const auto report = ex::sample(c);
            emit(resolve_out(out, "sample_" + c.experiment + ".json"), ex::to_json(report).dump(2) + "\n");
            const auto &m = report.summary;
            std::cerr << "empirical " << ex::format_double(m.empirical) << ", exact " << ex::format_double(m.exact)
                      << ", 3 sigma " << (m.within_3sigma ? "ok" : "exceeded") << '\n';
            return kOk;
        }
    } catch (const qproc::InvalidParameter &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
