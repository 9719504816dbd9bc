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

#include <gtest/gtest.h>

#include "qproc/closed_form.hpp"
#include "qproc/error.hpp"

namespace qproc::zoo {
namespace {

double value(const ClosedFormParams &p) { return closed_form(p).value; }

TEST(ClosedForm, LoopFamilies) {
    EXPECT_DOUBLE_EQ(value(U1LoopParams{1}), 0.5);
    EXPECT_DOUBLE_EQ(value(U1LoopParams{3}), 0.875);
    EXPECT_DOUBLE_EQ(value(Qid2LoopParams{1}), 0.25);
    // one correction loop after the first attempt
    EXPECT_DOUBLE_EQ(value(Qid2LoopParams{2}), 7.0 / 16.0);
    EXPECT_NEAR(1.0 - value(Qid2LoopParams{30}), std::pow(0.75, 30), 1e-15);
    EXPECT_NEAR(1.0 - value(Qid2LoopParams{30}), 1.785e-4, 5e-7);
    EXPECT_DOUBLE_EQ(value(QidNLoopParams{2, 4}), value(Qid2LoopParams{4}));
    EXPECT_NEAR(value(QidNLoopParams{3, 1}), 1.0 / 9.0, 1e-15);
    EXPECT_NEAR(value(DiagonalLoopParams{3, 2}), 1.0 - 4.0 / 9.0, 1e-15);
}

TEST(ClosedForm, FiniteGeometric) {
    EXPECT_NEAR(value(BzFiniteParams{std::sqrt(0.5), 4, std::nullopt}), 0.7, 1e-12);
    EXPECT_NEAR(value(BzFiniteParams{2.0, 3, 0.5}), 25.0 / 42.0, 1e-12);
    for (std::size_t n = 2; n < 10; ++n) {
        EXPECT_NEAR(value(BzFiniteParams{Complex{0.0, 1.0}, n, 0.3}), (n - 1.0) / n, 1e-12);
        EXPECT_NEAR(value(B0QuditParams{Complex{-1.0, 0.0}, n, 1.0}), (n - 1.0) / n, 1e-12);
    }
}

TEST(ClosedForm, RatioIsStableForLargeModulus) {
    const double r = geometric_success_ratio(1e3, 50);
    EXPECT_TRUE(std::isfinite(r));
    EXPECT_NEAR(r, 1e-6, 1e-9);
}

TEST(ClosedForm, LargeNApproachesLimit) {
    for (const double x : {0.25, 0.5, 0.81, 1.44, 4.0}) {
        const Complex z{std::sqrt(x), 0.0};
        for (const double a : {0.0, 0.3, 1.0}) {
            const double finite = value(BzFiniteParams{z, 200, a});
            const double limit = value(BzLimitParams{z, a + x * (1.0 - a)});
            EXPECT_NEAR(finite, limit, 1e-6) << x << " " << a;
        }
    }
}

TEST(ClosedForm, FlippedDenominatorLeavesUnitInterval) {
    // The variant with the geometric sums inverted exceeds one for |z| < 1.
    EXPECT_GT(bz_success_flipped_denominator(std::sqrt(0.5), 4, 0.5), 1.0);
    EXPECT_GT(bz_success_flipped_denominator(0.3, 3, 0.9), 1.0);
}

TEST(ClosedForm, InvalidParameters) {
    EXPECT_THROW((void)value(BzFiniteParams{0.0, 3, 0.5}), InvalidParameter);
    EXPECT_THROW((void)value(BzFiniteParams{1.0, 1, 0.5}), InvalidParameter);
    EXPECT_THROW((void)value(BzFiniteParams{1.0, 3, 1.5}), InvalidParameter);
    EXPECT_THROW((void)value(B0QuditParams{1.0, 3, -0.1}), InvalidParameter);
    EXPECT_THROW((void)value(QidNLoopParams{1, 3}), InvalidParameter);
    EXPECT_THROW((void)value(BzLimitParams{0.0, 1.0}), InvalidParameter);
    EXPECT_EQ(closed_form(Qid2LoopParams{2}).family, Family::Qid2Loop);
    EXPECT_EQ(family_name(Family::BzLimit), "BzLimit");
}

} // namespace
} // namespace qproc::zoo
