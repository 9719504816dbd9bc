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
 * Conditional loops: rerun a processor on a heralded failure with a program
 * that undoes the wrong operation and retries the target.
 *
 * Every rule works against the accumulated residual R (the product of the
 * failed branch operators so far, up to scale). The next round must realize
 * W = target * R^{-1}; the rule's encoder turns W into a program state for
 * its processor family. A round succeeds when its outcome is a designated
 * success label, or (optionally) when the applied branch is proportional
 * to W anyway.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qproc/linalg.hpp"
#include "qproc/processor.hpp"
#include "qproc/rng.hpp"

namespace qproc::loop {

struct CorrectionRule {
    std::string family;
    /// Basis in which the program register is measured.
    ProgramBasis measurement;
    /// Outcomes whose branch realizes the encoded operation.
    std::vector<std::string> success_labels;
    /// Program whose success branches are proportional to `needed`.
    std::function<ProgramState(const Operator &needed)> encode;
    /// W = target * residual^{-1}. Defaults to the dense inverse.
    std::function<Operator(const Operator &target, const Operator &residual)> required;

    /// Program for the next round given the accumulated residual.
    [[nodiscard]] ProgramState next_program(const Operator &target, const Operator &residual) const;
    [[nodiscard]] Operator required_operation(const Operator &target, const Operator &residual) const;
    [[nodiscard]] bool is_success_label(const std::string &label) const;
};

/// Single CNOT processor, target U(alpha); after k failures the program
/// encodes 2^k alpha.
CorrectionRule u1_rule();
/// vmc3 processor with U(alpha) targets, success on outcomes 0..2.
CorrectionRule vmc3_rule();
/// Cyclic-shift processor with N-dimensional program, target B(z). The next
/// program is geometric in z' = W_11 / W_00 (z^2, z^4, ... for N = 2).
CorrectionRule bz_rule(std::size_t n = 2);
/// Amplitude-modifier processor, target B0(z); z' = W_00 / W_11.
CorrectionRule amp_modifier_rule(std::size_t d, std::size_t n);
/// Qudit diagonal processor. Next entries are target / applied, normalized;
/// throws SingularProgram when an applied diagonal entry vanishes.
CorrectionRule diagonal_rule(std::size_t d);
/// Qubit QID; the program encodes su2_log of W (global phase dropped).
CorrectionRule qid2_rule();
/// Qudit QID; the program is program_for(W).
CorrectionRule qidN_rule(std::size_t n);

enum class LoopStatus { Succeeded, Exhausted, Uncorrectable };

std::string status_name(LoopStatus s);

struct LoopPolicy {
    std::size_t max_rounds = 1;
    /// Per-round success labels; round r uses entry min(r, size - 1).
    /// Empty means the rule's own labels.
    std::vector<std::vector<std::string>> success_labels;
    /// Count an outcome as success when its branch is proportional to the
    /// operation the round was asked to perform.
    bool accept_equivalent_branches = true;
    double tol = 1e-9;

    [[nodiscard]] bool is_success(const CorrectionRule &rule, std::size_t round, const std::string &label) const;
};

struct LoopRound {
    ProgramState program;
    std::string outcome;
    double probability = 0.0;
    Ket post_state;
};

struct LoopTrace {
    std::vector<LoopRound> rounds;
    LoopStatus status = LoopStatus::Exhausted;

    [[nodiscard]] bool succeeded() const { return status == LoopStatus::Succeeded; }
    [[nodiscard]] std::size_t rounds_used() const { return rounds.size(); }
};

/// Samples rounds until success, exhaustion or an uncorrectable residual.
LoopTrace run_loop(const ProcessorDefinition &proc, const Ket &psi, const Operator &target,
                   const CorrectionRule &rule, const LoopPolicy &policy, RngStream &rng);

struct ExactOptions {
    /// Frontier size above which uniform levels are thinned to representatives.
    std::size_t max_frontier = 256;
    /// Branch-probability agreement required before thinning.
    double uniform_tol = 1e-12;
};

/**
 * Probability that the loop succeeds within `rounds` rounds, from the
 * outcome tree built with decompose at every node.
 *
 * The tree is expanded level by level. When a level has more than
 * max_frontier failure children it is thinned to evenly spaced
 * representatives carrying the level's total weight, which is only done if
 * every node of that level showed the same branch probabilities and the
 * same set of successful outcomes.
 * Otherwise std::length_error is thrown.
 */
double exact_success(const ProcessorDefinition &proc, const Ket &psi, const Operator &target,
                     const CorrectionRule &rule, std::size_t rounds, const LoopPolicy &policy = {},
                     const ExactOptions &options = {});

} // namespace qproc::loop
