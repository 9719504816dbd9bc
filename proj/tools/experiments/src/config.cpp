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
#include <algorithm>
#include <cmath>
#include <limits>

#include "qproc/closed_form.hpp"
#include "qproc/error.hpp"
#include "qproc/experiments.hpp"
#include "qproc/random.hpp"
#include "qproc/zoo.hpp"

namespace qproc::experiments {

namespace {

// Trial indices from the top of the range are reserved for per-config draws.
constexpr std::uint64_t kTargetStream = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kStateStream = kTargetStream - 1;

std::size_t whole(const ExperimentConfig &c, const std::string &name, double fallback, std::size_t lo) {
    const double v = c.param(name, fallback);
    if (!(v >= static_cast<double>(lo)) || v != std::floor(v) || v > 4096.0) {
        throw InvalidParameter("parameter " + name + " must be an integer >= " + std::to_string(lo));
    }
    return static_cast<std::size_t>(v);
}

Complex z_of(const ExperimentConfig &c) {
    const double r = c.param("z", std::sqrt(0.5));
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw InvalidParameter("z must be a positive modulus (use z_phase for the argument)");
    }
    return std::polar(r, c.param("z_phase", 0.0));
}

Ket pinned_state(double a, std::size_t d) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw InvalidParameter("alpha_sq must lie in [0, 1]");
    }
    std::vector<Complex> amps(d, std::sqrt((1.0 - a) / static_cast<double>(d - 1)));
    amps[0] = std::sqrt(a);
    return Ket::from(amps);
}

} // namespace

const std::vector<std::string> &experiment_names() {
    static const std::vector<std::string> names = {"u1", "vmc3", "bz", "qutrit", "b0", "qid2", "qidN"};
    return names;
}

const std::vector<std::string> &table_names() {
    static const std::vector<std::string> names = {"u1", "vmc3", "bz", "qutrit", "b0", "qid2", "qidN", "limits"};
    return names;
}

void ExperimentConfig::validate() const {
    (void)experiment_index();
    if (rounds < 1) {
        throw InvalidParameter("rounds must be at least 1");
    }
    if (trials < 1) {
        throw InvalidParameter("trials must be at least 1");
    }
    if (!(tol > 0.0)) {
        throw InvalidParameter("tol must be positive");
    }
    (void)make_setup(*this);
}

std::uint64_t ExperimentConfig::experiment_index() const {
    const auto &names = experiment_names();
    const auto it = std::find(names.begin(), names.end(), experiment);
    if (it == names.end()) {
        throw InvalidParameter("unknown experiment '" + experiment + "'");
    }
    return static_cast<std::uint64_t>(it - names.begin());
}

double ExperimentConfig::param(const std::string &name, double fallback) const {
    const auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

Json to_json(const ExperimentConfig &c) {
    Json params = Json::object();
    for (const auto &[k, v] : c.params) {
        params[k] = v;
    }
    return Json{{"experiment", c.experiment}, {"params", params},   {"rounds", c.rounds},
                {"trials", c.trials},         {"seed", c.seed},     {"tol", c.tol},
                {"keep_traces", c.keep_traces}};
}

ExperimentConfig config_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InvalidParameter("config must be a JSON object");
    }
    ExperimentConfig c;
    try {
        c.experiment = j.value("experiment", c.experiment);
        if (j.contains("params")) {
            for (const auto &[k, v] : j.at("params").items()) {
                c.params[k] = v.get<double>();
            }
        }
        const auto count = [&](const char *key, std::size_t fallback) {
            if (!j.contains(key)) {
                return fallback;
            }
            const auto &v = j.at(key);
            if (!v.is_number_integer() || v.get<long long>() < 0) {
                throw InvalidParameter(std::string(key) + " must be a non-negative integer");
            }
            return v.get<std::size_t>();
        };
        c.rounds = count("rounds", c.rounds);
        c.trials = count("trials", c.trials);
        c.seed = j.value("seed", c.seed);
        c.tol = j.value("tol", c.tol);
        c.keep_traces = j.value("keep_traces", c.keep_traces);
    } catch (const Json::exception &e) {
        throw InvalidParameter(std::string("bad config: ") + e.what());
    }
    return c;
}

Setup make_setup(const ExperimentConfig &c) {
    const std::string &e = c.experiment;
    const std::uint64_t idx = c.experiment_index();
    std::optional<Setup> s;
    std::size_t data_dim = 2;
    if (e == "u1") {
        s.emplace(Setup{zoo::u1_cnot(), loop::u1_rule(), zoo::u_rotation(c.param("alpha", 0.3)), {}, false});
    } else if (e == "vmc3") {
        s.emplace(Setup{zoo::vmc3(), loop::vmc3_rule(), zoo::u_rotation(c.param("alpha", 0.3)), {}, false});
    } else if (e == "bz") {
        const std::size_t n = whole(c, "N", 2, 2);
        s.emplace(Setup{zoo::cyclic_shift_processor(n), loop::bz_rule(n), zoo::b_operator(z_of(c)), {}, true});
    } else if (e == "qutrit") {
        data_dim = whole(c, "d", 3, 2);
        const double phi = c.param("phi", 0.7);
        std::vector<Complex> phases(data_dim);
        for (std::size_t k = 0; k < data_dim; ++k) {
            phases[k] = std::polar(1.0, phi * static_cast<double>(k * k));
        }
        s.emplace(Setup{zoo::qudit_diagonal_processor(data_dim), loop::diagonal_rule(data_dim),
                        Operator::diagonal(phases), {}, true});
    } else if (e == "b0") {
        data_dim = whole(c, "d", 3, 2);
        const std::size_t n = whole(c, "N", 4, 2);
        s.emplace(Setup{zoo::amp_modifier_processor(data_dim, n), loop::amp_modifier_rule(data_dim, n),
                        zoo::b0_operator(z_of(c), data_dim), {}, true});
    } else if (e == "qid2") {
        const Vec3 mu{c.param("mu_x", 0.2), c.param("mu_y", -0.5), c.param("mu_z", 0.9)};
        s.emplace(Setup{zoo::qid2(), loop::qid2_rule(), su2_exp(mu), {}, false});
    } else if (e == "qidN") {
        data_dim = whole(c, "N", 2, 2);
        RngStream rng = RngStream::derive(c.seed, idx, kTargetStream);
        s.emplace(Setup{zoo::qidN(data_dim), loop::qidN_rule(data_dim), haar_unitary(data_dim, rng), {}, false});
    }
    if (c.has("alpha_sq")) {
        s->fixed_state = pinned_state(c.param("alpha_sq", 1.0), data_dim);
    }
    return std::move(*s);
}

loop::LoopPolicy heralded_policy(std::size_t rounds) {
    loop::LoopPolicy p;
    p.max_rounds = rounds;
    p.accept_equivalent_branches = false;
    return p;
}

double engine_exact(const ExperimentConfig &c) {
    const Setup s = make_setup(c);
    const auto policy = heralded_policy(c.rounds);
    const auto run = [&](const Ket &psi) { return loop::exact_success(s.proc, psi, s.target, s.rule, c.rounds, policy); };
    if (s.fixed_state) {
        return run(*s.fixed_state);
    }
    const std::size_t d = s.proc.data_dim();
    if (s.diagonal) {
        double total = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            total += run(Ket::basis(d, k));
        }
        return total / static_cast<double>(d);
    }
    RngStream rng = RngStream::derive(c.seed, c.experiment_index(), kStateStream);
    return run(haar_ket(d, rng));
}

std::optional<double> closed_value(const ExperimentConfig &c) {
    const std::string &e = c.experiment;
    const std::optional<double> a = c.has("alpha_sq") ? std::optional<double>(c.param("alpha_sq", 1.0)) : std::nullopt;
    if (e == "u1") {
        return zoo::closed_form(zoo::U1LoopParams{c.rounds}).value;
    }
    if (e == "vmc3") {
        return c.rounds == 1 ? std::optional<double>(0.75) : std::nullopt;
    }
    if (e == "bz") {
        if (c.rounds != 1) {
            return std::nullopt;
        }
        return zoo::closed_form(zoo::BzFiniteParams{z_of(c), whole(c, "N", 2, 2), a}).value;
    }
    if (e == "qutrit") {
        return zoo::closed_form(zoo::DiagonalLoopParams{whole(c, "d", 3, 2), c.rounds}).value;
    }
    if (e == "b0") {
        if (c.rounds != 1) {
            return std::nullopt;
        }
        const std::size_t d = whole(c, "d", 3, 2);
        const double x = std::norm(z_of(c));
        double b0 = (x + static_cast<double>(d - 1)) / static_cast<double>(d);
        if (a) {
            b0 = x * *a + (1.0 - *a);
        }
        return zoo::closed_form(zoo::B0QuditParams{z_of(c), whole(c, "N", 4, 2), b0}).value;
    }
    if (e == "qid2") {
        return zoo::closed_form(zoo::Qid2LoopParams{c.rounds}).value;
    }
    if (e == "qidN") {
        return zoo::closed_form(zoo::QidNLoopParams{whole(c, "N", 2, 2), c.rounds}).value;
    }
    throw InvalidParameter("unknown experiment '" + e + "'");
}

} // namespace qproc::experiments
