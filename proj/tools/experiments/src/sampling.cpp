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
#include <cmath>

#include "qproc/error.hpp"
#include "qproc/experiments.hpp"
#include "qproc/random.hpp"

namespace qproc::experiments {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json complex_list(const std::vector<Complex> &v) {
    Json out = Json::array();
    for (const auto &z : v) {
        out.push_back(complex_json(z));
    }
    return out;
}

std::vector<double> axis_values(const std::string &name, const Json &axis) {
    std::vector<double> out;
    if (axis.is_array()) {
        for (const auto &v : axis) {
            out.push_back(v.get<double>());
        }
        return out;
    }
    if (!axis.is_object()) {
        throw InvalidParameter("grid axis " + name + " must be a list or {from, to, step}");
    }
    const double from = axis.at("from").get<double>();
    const double to = axis.at("to").get<double>();
    const double step = axis.value("step", 1.0);
    if (!(step > 0.0) || !std::isfinite(from) || !std::isfinite(to)) {
        throw InvalidParameter("grid axis " + name + " needs finite bounds and a positive step");
    }
    if (to < from) {
        return out;
    }
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    if (count > 100000) {
        throw InvalidParameter("grid axis " + name + " has too many points");
    }
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(from + static_cast<double>(i) * step);
    }
    return out;
}

void set_axis(ExperimentConfig &c, const std::string &name, double v) {
    if (name == "rounds") {
        if (!(v >= 1.0) || v != std::floor(v)) {
            throw InvalidParameter("rounds must be a positive integer");
        }
        c.rounds = static_cast<std::size_t>(v);
    } else {
        c.params[name] = v;
    }
}

} // namespace

SweepConfig sweep_from_json(const Json &j) {
    SweepConfig s;
    Json base = j;
    if (!j.is_object()) {
        throw InvalidParameter("sweep config must be a JSON object");
    }
    base.erase("grid");
    const bool sampled = j.contains("trials");
    s.base = config_from_json(base);
    if (!sampled) {
        s.base.trials = 0;
    }
    if (j.contains("grid")) {
        try {
            for (const auto &[name, axis] : j.at("grid").items()) {
                if (name == "trials" || name == "seed") {
                    throw InvalidParameter("cannot sweep over " + name);
                }
                s.grid.push_back({name, axis_values(name, axis)});
            }
        } catch (const Json::exception &e) {
            throw InvalidParameter(std::string("bad grid: ") + e.what());
        }
    }
    (void)s.base.experiment_index();
    return s;
}

std::vector<ResultRow> sweep(const SweepConfig &s) {
    std::vector<ResultRow> rows;
    std::size_t total = 1;
    for (const auto &axis : s.grid) {
        total *= axis.values.size();
    }
    for (std::size_t point = 0; point < total; ++point) {
        ExperimentConfig c = s.base;
        std::string label;
        std::size_t rest = point;
        std::vector<std::size_t> pick(s.grid.size());
        for (std::size_t a = s.grid.size(); a-- > 0;) {
            pick[a] = rest % s.grid[a].values.size();
            rest /= s.grid[a].values.size();
        }
        for (std::size_t a = 0; a < s.grid.size(); ++a) {
            const double v = s.grid[a].values[pick[a]];
            set_axis(c, s.grid[a].name, v);
            label += (a ? ";" : "") + s.grid[a].name + "=" + format_double(v);
        }
        const std::optional<double> closed = closed_value(c);
        ResultRow row = make_row("success", label, engine_exact(c), closed, {}, closed ? "closed form" : "");
        if (s.base.trials > 0) {
            c.seed = mix64(s.base.seed ^ point);
            c.keep_traces = false;
            row.empirical = sample(c).summary.empirical;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json program_params(const ProgramState &xi) {
    struct Visitor {
        Json operator()(const U1Encoding &e) const { return {{"encoding", "u1"}, {"alpha", e.alpha}}; }
        Json operator()(const Su2Encoding &e) const {
            return {{"encoding", "su2"}, {"mu", Json::array({e.mu[0], e.mu[1], e.mu[2]})}};
        }
        Json operator()(const DiagonalEncoding &e) const {
            return {{"encoding", "diagonal"}, {"entries", complex_list(e.entries)}};
        }
        Json operator()(const GeometricEncoding &e) const {
            return {{"encoding", "geometric"}, {"z", complex_json(e.z)}, {"n", e.n}};
        }
        Json operator()(const WeylEncoding &e) const {
            return {{"encoding", "weyl"}, {"n", e.n}, {"coefficients", complex_list(e.coefficients)}, {"scale", e.scale}};
        }
        Json operator()(const RawEncoding &) const { return {{"encoding", "raw"}, {"ket", complex_list(xi.ket().to_vector())}}; }
        const ProgramState &xi;
    };
    return std::visit(Visitor{xi}, xi.encoding());
}

TrialRecord record(const loop::LoopTrace &trace) {
    TrialRecord t;
    for (const auto &r : trace.rounds) {
        t.rounds.push_back({program_params(r.program), r.outcome, r.probability});
    }
    t.succeeded = trace.succeeded();
    t.status = loop::status_name(trace.status);
    return t;
}

Json to_json(const TrialRecord &t) {
    Json rounds = Json::array();
    for (const auto &r : t.rounds) {
        rounds.push_back({{"program_params", r.program_params}, {"outcome", r.outcome}, {"prob", r.prob}});
    }
    return {{"rounds", rounds}, {"succeeded", t.succeeded}, {"status", t.status}, {"rounds_used", t.rounds.size()}};
}

TrialRecord trial_from_json(const Json &j) {
    TrialRecord t;
    try {
        for (const auto &r : j.at("rounds")) {
            t.rounds.push_back({r.at("program_params"), r.at("outcome").get<std::string>(), r.at("prob").get<double>()});
        }
        t.succeeded = j.at("succeeded").get<bool>();
        t.status = j.at("status").get<std::string>();
    } catch (const Json::exception &e) {
        throw InvalidParameter(std::string("bad trace: ") + e.what());
    }
    return t;
}

SampleReport sample(const ExperimentConfig &c) {
    c.validate();
    const Setup s = make_setup(c);
    const auto policy = heralded_policy(c.rounds);
    const std::uint64_t idx = c.experiment_index();
    SampleReport report;
    report.config = c;
    std::size_t successes = 0;
    std::size_t rounds_total = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
        RngStream rng = RngStream::derive(c.seed, idx, t);
        const Ket psi = s.fixed_state ? *s.fixed_state : haar_ket(s.proc.data_dim(), rng);
        const auto trace = loop::run_loop(s.proc, psi, s.target, s.rule, policy, rng);
        successes += trace.succeeded() ? 1 : 0;
        rounds_total += trace.rounds_used();
        if (c.keep_traces) {
            report.traces.push_back(record(trace));
        }
    }
    SampleSummary &m = report.summary;
    m.trials = c.trials;
    m.successes = successes;
    m.empirical = static_cast<double>(successes) / static_cast<double>(c.trials);
    m.exact = engine_exact(c);
    m.sigma = std::sqrt(std::max(0.0, m.exact * (1.0 - m.exact)) / static_cast<double>(c.trials));
    m.interval = {m.exact - 3.0 * m.sigma, m.exact + 3.0 * m.sigma};
    m.within_3sigma = std::abs(m.empirical - m.exact) <= 3.0 * m.sigma + 1e-12;
    m.mean_rounds = static_cast<double>(rounds_total) / static_cast<double>(c.trials);
    return report;
}

Json to_json(const SampleReport &r) {
    Json traces = Json::array();
    for (const auto &t : r.traces) {
        traces.push_back(to_json(t));
    }
    const SampleSummary &m = r.summary;
    Json summary = {{"trials", m.trials},
                    {"successes", m.successes},
                    {"empirical", m.empirical},
                    {"exact", m.exact},
                    {"sigma", m.sigma},
                    {"interval", Json::array({m.interval.first, m.interval.second})},
                    {"within_3sigma", m.within_3sigma},
                    {"mean_rounds", m.mean_rounds}};
    return {{"config", to_json(r.config)}, {"traces", traces}, {"summary", summary}};
}

} // namespace qproc::experiments
