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
/**
 * @file
 * Experiment harness: reproduction tables, parameter sweeps, Monte Carlo
 * sampling of conditional loops and the self-check suites behind
 * `qproc verify`.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qproc/loop.hpp"

namespace qproc::experiments {

using Json = nlohmann::ordered_json;

/// Known experiment ids; the position doubles as the RNG experiment index.
const std::vector<std::string> &experiment_names();
/// Tables accepted by reproduce().
const std::vector<std::string> &table_names();

struct ExperimentConfig {
    std::string experiment = "qid2";
    /// Family parameters, e.g. alpha, z, z_phase, N, d, mu_x, alpha_sq.
    std::map<std::string, double> params;
    std::size_t rounds = 1;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    bool keep_traces = true;

    /// Throws InvalidParameter for unknown ids or out-of-range fields.
    void validate() const;
    [[nodiscard]] std::uint64_t experiment_index() const;
    [[nodiscard]] double param(const std::string &name, double fallback) const;
    [[nodiscard]] bool has(const std::string &name) const { return params.count(name) != 0; }
};

Json to_json(const ExperimentConfig &c);
ExperimentConfig config_from_json(const Json &j);

/// Processor, rule and target operation for a configuration.
struct Setup {
    ProcessorDefinition proc;
    loop::CorrectionRule rule;
    Operator target;
    /// Fixed data state, if the configuration pins one.
    std::optional<Ket> fixed_state;
    /// Diagonal families: success is linear in |psi_k|^2.
    bool diagonal = false;
};

Setup make_setup(const ExperimentConfig &c);

/// Loops in experiments count only the designated outcomes as success.
loop::LoopPolicy heralded_policy(std::size_t rounds);

/// Success within c.rounds from the outcome tree. Without a pinned state
/// this is the Haar average (basis-state mean for diagonal families,
/// state independent otherwise).
double engine_exact(const ExperimentConfig &c);
/// Closed-form value for the configuration, when one exists.
std::optional<double> closed_value(const ExperimentConfig &c);

struct ResultRow {
    std::string quantity;
    std::string params;
    double computed = 0.0;
    std::optional<double> empirical;
    std::optional<double> reference_value;
    std::optional<double> deviation;
    std::string flag;
    std::string note;
};

ResultRow make_row(std::string quantity, std::string params, double computed, std::optional<double> reference,
                   std::string flag = {}, std::string note = {});

void write_csv(std::ostream &out, const std::vector<ResultRow> &rows);
/// Shortest round-trip decimal form, locale independent.
std::string format_double(double v);

/// Throws InvalidParameter for an unknown table.
std::vector<ResultRow> reproduce(const std::string &table);
/// Rows whose deviation exceeds tol without an approx/erratum flag.
std::vector<ResultRow> unexplained(const std::vector<ResultRow> &rows, double tol);

struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

struct SweepConfig {
    ExperimentConfig base;
    std::vector<SweepAxis> grid;
};

SweepConfig sweep_from_json(const Json &j);
/// One row per grid point, first axis outermost.
std::vector<ResultRow> sweep(const SweepConfig &s);

struct RoundRecord {
    Json program_params;
    std::string outcome;
    double prob = 0.0;
    bool operator==(const RoundRecord &) const = default;
};

struct TrialRecord {
    std::vector<RoundRecord> rounds;
    bool succeeded = false;
    std::string status;
    bool operator==(const TrialRecord &) const = default;
};

Json program_params(const ProgramState &xi);
TrialRecord record(const loop::LoopTrace &trace);
Json to_json(const TrialRecord &t);
TrialRecord trial_from_json(const Json &j);

struct SampleSummary {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double empirical = 0.0;
    double exact = 0.0;
    double sigma = 0.0;
    std::pair<double, double> interval{0.0, 0.0};
    bool within_3sigma = false;
    double mean_rounds = 0.0;
};

struct SampleReport {
    ExperimentConfig config;
    std::vector<TrialRecord> traces;
    SampleSummary summary;
};

SampleReport sample(const ExperimentConfig &c);
Json to_json(const SampleReport &r);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Erratum {
    std::string topic;
    std::string status;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<Erratum> errata;
    [[nodiscard]] bool passed() const;
};

struct VerifyOptions {
    /// Corrupts one processor block before the processor_core suite runs.
    bool inject_fault = false;
};

VerifyReport verify(const VerifyOptions &options = {});
void print_report(std::ostream &out, const VerifyReport &r);

} // namespace qproc::experiments
