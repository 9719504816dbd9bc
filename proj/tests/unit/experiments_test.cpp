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
#include <sstream>

#include <gtest/gtest.h>

#include "qproc/error.hpp"
#include "qproc/experiments.hpp"

namespace qproc::experiments {
namespace {

TEST(Reproduce, EveryTableIsExplained) {
    for (const auto &t : table_names()) {
        const auto rows = reproduce(t);
        EXPECT_FALSE(rows.empty()) << t;
        EXPECT_TRUE(unexplained(rows, 1e-9).empty()) << t;
    }
    EXPECT_THROW((void)reproduce("nope"), InvalidParameter);
}

TEST(Reproduce, AnchorRows) {
    const auto bz = reproduce("bz");
    EXPECT_EQ(bz[0].quantity, "state-averaged success");
    EXPECT_NEAR(bz[0].computed, 0.7, 1e-12);
    EXPECT_NEAR(*bz[0].deviation, 0.0, 1e-12);
    EXPECT_NEAR(bz[3].computed, 25.0 / 42.0, 1e-12);
    EXPECT_EQ(bz[3].flag, "erratum");
    const auto qid2 = reproduce("qid2");
    EXPECT_NEAR(qid2[1].computed, 7.0 / 16.0, 1e-12);
    EXPECT_EQ(qid2[3].flag, "approx");
    EXPECT_NEAR(qid2[3].computed, std::pow(0.75, 30), 1e-12);
    for (const auto &r : reproduce("limits")) {
        EXPECT_LE(*r.deviation, 1e-6);
    }
}

TEST(Reproduce, StableAcrossRuns) {
    std::ostringstream a;
    std::ostringstream b;
    write_csv(a, reproduce("qidN"));
    write_csv(b, reproduce("qidN"));
    EXPECT_EQ(a.str(), b.str());
}

TEST(Csv, QuotesAndNumberFormat) {
    std::ostringstream out;
    write_csv(out, {make_row("a,b", "x=1", 0.1, 0.1, "", "say \"hi\"")});
    EXPECT_EQ(out.str(), "quantity,params,computed,empirical,reference_value,deviation,flag,note\n"
                         "\"a,b\",x=1,0.1,,0.1,0,,\"say \"\"hi\"\"\"\n");
    EXPECT_EQ(format_double(0.7), "0.7");
    EXPECT_EQ(format_double(1e-4), "1e-04");
    EXPECT_EQ(format_double(0.25), "0.25");
}

TEST(Sweep, Qid2RoundsMatchClosedForm) {
    const auto s = sweep_from_json(Json::parse(R"({"experiment":"qid2","grid":{"rounds":{"from":1,"to":30}}})"));
    const auto rows = sweep(s);
    ASSERT_EQ(rows.size(), 30U);
    for (std::size_t n = 1; n <= 30; ++n) {
        EXPECT_NEAR(rows[n - 1].computed, 1.0 - std::pow(0.75, static_cast<double>(n)), 1e-12);
        EXPECT_EQ(rows[n - 1].params, "rounds=" + std::to_string(n));
        EXPECT_FALSE(rows[n - 1].empirical.has_value());
    }
}

TEST(Sweep, EmptyRangeGivesHeaderOnly) {
    const auto s = sweep_from_json(Json::parse(R"({"experiment":"qid2","grid":{"rounds":{"from":3,"to":1}}})"));
    std::ostringstream out;
    write_csv(out, sweep(s));
    EXPECT_EQ(out.str(), "quantity,params,computed,empirical,reference_value,deviation,flag,note\n");
}

TEST(Sweep, InvalidRangeRejected) {
    EXPECT_THROW((void)sweep_from_json(Json::parse(R"({"experiment":"qid2","grid":{"rounds":{"from":1,"to":3,"step":0}}})")),
                 InvalidParameter);
    EXPECT_THROW((void)sweep_from_json(Json::parse(R"({"experiment":"nope"})")), InvalidParameter);
}

TEST(Sweep, BzIncreasesWithProgramDimension) {
    const auto s = sweep_from_json(Json::parse(
        R"({"experiment":"bz","grid":{"z":{"from":0.25,"to":2.0,"step":0.25},"N":{"from":2,"to":8}}})"));
    const auto rows = sweep(s);
    ASSERT_EQ(rows.size(), 8U * 7U);
    for (std::size_t zi = 0; zi < 8; ++zi) {
        for (std::size_t k = 1; k < 7; ++k) {
            EXPECT_GT(rows[zi * 7 + k].computed, rows[zi * 7 + k - 1].computed - 1e-15) << rows[zi * 7 + k].params;
        }
        for (std::size_t k = 0; k < 7; ++k) {
            EXPECT_LE(*rows[zi * 7 + k].deviation, 1e-12);
        }
    }
}

TEST(Sample, QidNSingleRoundWithinThreeSigma) {
    ExperimentConfig c;
    c.experiment = "qidN";
    c.params["N"] = 2;
    c.trials = 20000;
    c.seed = 42;
    c.keep_traces = false;
    const auto r = sample(c);
    EXPECT_NEAR(r.summary.exact, 0.25, 1e-12);
    EXPECT_TRUE(r.summary.within_3sigma) << r.summary.empirical;
    EXPECT_TRUE(r.traces.empty());
}

TEST(Sample, SingleTraceSerialized) {
    ExperimentConfig c;
    c.experiment = "qid2";
    c.rounds = 5;
    c.trials = 1;
    c.seed = 3;
    const auto r = sample(c);
    ASSERT_EQ(r.traces.size(), 1U);
    const Json j = to_json(r);
    EXPECT_EQ(j["traces"].size(), 1U);
    EXPECT_EQ(j["traces"][0]["rounds"][0]["program_params"]["encoding"], "su2");
    EXPECT_EQ(j["summary"]["trials"], 1);
}

TEST(Sample, SameSeedSameBytes) {
    ExperimentConfig c;
    c.experiment = "bz";
    c.params["N"] = 3;
    c.rounds = 3;
    c.trials = 200;
    c.seed = 9;
    EXPECT_EQ(to_json(sample(c)).dump(2), to_json(sample(c)).dump(2));
    ExperimentConfig d = c;
    d.seed = 10;
    EXPECT_NE(to_json(sample(c)).dump(), to_json(sample(d)).dump());
}

TEST(Sample, TracesRoundTrip) {
    for (const auto &e : experiment_names()) {
        ExperimentConfig c;
        c.experiment = e;
        c.rounds = 4;
        c.trials = 20;
        c.seed = 5;
        for (const auto &t : sample(c).traces) {
            const Json j = Json::parse(to_json(t).dump());
            EXPECT_EQ(trial_from_json(j), t) << e;
        }
    }
}

TEST(Sample, ConfigValidation) {
    ExperimentConfig c;
    c.trials = 0;
    EXPECT_THROW(c.validate(), InvalidParameter);
    c = ExperimentConfig{};
    c.experiment = "bz";
    c.params["N"] = 1.5;
    EXPECT_THROW(c.validate(), InvalidParameter);
    EXPECT_THROW((void)config_from_json(Json::parse(R"({"trials":-3})")), InvalidParameter);
    const auto back = config_from_json(to_json(ExperimentConfig{}));
    EXPECT_EQ(back.experiment, "qid2");
}

TEST(Verify, CleanRunPassesAndListsErrata) {
    const auto r = verify();
    EXPECT_TRUE(r.passed());
    ASSERT_EQ(r.errata.size(), 2U);
    for (const auto &e : r.errata) {
        EXPECT_EQ(e.status, "resolved (oracle)");
    }
}

TEST(Verify, InjectedFaultIsCaught) { EXPECT_FALSE(verify({true}).passed()); }

} // namespace
} // namespace qproc::experiments
