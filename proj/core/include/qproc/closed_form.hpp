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
 * Closed-form success probabilities for the processor families.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "qproc/linalg.hpp"

namespace qproc::zoo {

enum class Family { U1Loop, BzFinite, B0Qudit, Qid2Loop, QidNLoop, BzLimit, DiagonalLoop };

std::string family_name(Family f);

/// 1 - (1/2)^rounds.
struct U1LoopParams {
    std::size_t rounds = 1;
};
/// B(z) on the N-dimensional cyclic program. Without alpha_sq the value is
/// averaged over Haar-random data states (|alpha|^2 uniform on [0, 1]).
struct BzFiniteParams {
    Complex z{1.0};
    std::size_t n = 2;
    std::optional<double> alpha_sq;
};
/// B0(z) processor; b0_norm_sq = ||B0(z) psi||^2.
struct B0QuditParams {
    Complex z{1.0};
    std::size_t n = 2;
    double b0_norm_sq = 1.0;
};
/// 1 - (3/4)^rounds. One correction loop is two rounds.
struct Qid2LoopParams {
    std::size_t rounds = 1;
};
/// 1 - (1 - 1/N^2)^rounds.
struct QidNLoopParams {
    std::size_t n = 2;
    std::size_t rounds = 1;
};
/// N -> infinity limit of the B(z) or B0(z) success: target_norm_sq for
/// |z| <= 1 and target_norm_sq / |z|^2 for |z| > 1.
struct BzLimitParams {
    Complex z{1.0};
    double target_norm_sq = 1.0;
};
/// Unitary diagonal target on a D-dimensional qudit: 1 - (1 - 1/D)^rounds.
struct DiagonalLoopParams {
    std::size_t d = 3;
    std::size_t rounds = 1;
};

using ClosedFormParams = std::variant<U1LoopParams, BzFiniteParams, B0QuditParams, Qid2LoopParams, QidNLoopParams,
                                      BzLimitParams, DiagonalLoopParams>;

struct ClosedFormProb {
    Family family;
    ClosedFormParams params;
    double value = 0.0;
};

/// Throws InvalidParameter on out-of-domain parameters.
ClosedFormProb closed_form(const ClosedFormParams &params);

/// (1 - x^{N-1}) / (1 - x^N) with x = |z|^2, evaluated as a ratio of
/// geometric sums so that |z| = 1 needs no special case.
double geometric_success_ratio(Complex z, std::size_t n);

/// 1 - (1-x)(a x^{N-1} + 1 - a) / (x^N - 1), x = |z|^2, a = |alpha|^2:
/// the B(z) success formula with the denominator sign flipped. Exceeds 1
/// for |z| < 1; kept for the errata report.
double bz_success_flipped_denominator(Complex z, std::size_t n, double alpha_sq);

} // namespace qproc::zoo
