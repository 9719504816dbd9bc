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
#include "qproc/loop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

#include "qproc/error.hpp"
#include "qproc/zoo.hpp"

namespace qproc::loop {

namespace {

std::vector<std::string> numbered_labels(std::size_t count) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(std::to_string(i));
    }
    return out;
}

/// Diagonal of w, after checking that the off-diagonal part is negligible.
std::vector<Complex> diagonal_of(const Operator &w, const char *family) {
    if (!w.is_square()) {
        throw DimensionMismatch("required operation is not square");
    }
    const double scale = w.frobenius_norm();
    std::vector<Complex> d(w.rows());
    double off = 0.0;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < w.cols(); ++j) {
            if (i == j) {
                d[i] = w(i, i);
            } else {
                off += std::norm(w(i, j));
            }
        }
    }
    if (std::sqrt(off) > 1e-9 * scale) {
        throw InvalidParameter(std::string(family) + " rule can only encode diagonal operations");
    }
    return d;
}

double u1_angle(const Operator &w) {
    const auto d = diagonal_of(w, "u1");
    if (d.size() != 2 || std::abs(std::abs(d[0]) - std::abs(d[1])) > 1e-9 * (std::abs(d[0]) + std::abs(d[1]))) {
        throw InvalidParameter("u1 rule needs an operation proportional to U(alpha)");
    }
    return 0.5 * (std::arg(d[0]) - std::arg(d[1]));
}

Operator normalized_residual(const Operator &r) {
    const double n = r.frobenius_norm();
    if (n == 0.0) {
        throw SingularOperator("residual vanished");
    }
    Operator out = Complex{1.0 / n} * r;
    // Residuals of the unitary families drift off the unitary group by a
    // factor of about two per round; snap them back to the polar factor.
    const double d = static_cast<double>(r.rows());
    if (r.is_square() && is_unitary(Complex{std::sqrt(d)} * out, 1e-8)) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(out.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
        out = Operator(Eigen::MatrixXcd(svd.matrixU() * svd.matrixV().adjoint() / std::sqrt(d)));
    }
    return out;
}

} // namespace

ProgramState CorrectionRule::next_program(const Operator &target, const Operator &residual) const {
    return encode(required_operation(target, residual));
}

Operator CorrectionRule::required_operation(const Operator &target, const Operator &residual) const {
    if (required) {
        return required(target, residual);
    }
    return target * inverse(residual);
}

bool CorrectionRule::is_success_label(const std::string &label) const {
    return std::find(success_labels.begin(), success_labels.end(), label) != success_labels.end();
}

CorrectionRule u1_rule() {
    CorrectionRule r{"u1", ProgramBasis::computational(2), std::vector<std::string>{"0"}, {}, {}};
    r.encode = [](const Operator &w) { return zoo::u1_program(u1_angle(w)); };
    return r;
}

CorrectionRule vmc3_rule() {
    CorrectionRule r{"vmc3", ProgramBasis::computational(4), std::vector<std::string>{"0", "1", "2"}, {}, {}};
    r.encode = [](const Operator &w) { return zoo::vmc3_program(u1_angle(w)); };
    return r;
}

CorrectionRule bz_rule(std::size_t n) {
    CorrectionRule r{"bz", ProgramBasis::computational(n), numbered_labels(n - 1), {}, {}};
    r.encode = [n](const Operator &w) {
        const auto d = diagonal_of(w, "bz");
        if (d.size() != 2) {
            throw DimensionMismatch("bz rule acts on a qubit");
        }
        if (std::abs(d[0]) <= 1e-12 * std::abs(d[1]) || d[1] == Complex{0.0}) {
            throw SingularProgram("B(z) correction needs a finite non-zero z");
        }
        return zoo::geometric_program(d[1] / d[0], n);
    };
    return r;
}

CorrectionRule amp_modifier_rule(std::size_t d, std::size_t n) {
    CorrectionRule r{"amp_modifier", ProgramBasis::computational(n), numbered_labels(n - 1), {}, {}};
    r.encode = [d, n](const Operator &w) {
        const auto diag = diagonal_of(w, "amp_modifier");
        if (diag.size() != d) {
            throw DimensionMismatch("amp_modifier rule: wrong data dimension");
        }
        for (std::size_t k = 2; k < d; ++k) {
            if (std::abs(diag[k] - diag[1]) > 1e-9 * std::abs(diag[1])) {
                throw InvalidParameter("amp_modifier rule needs equal weights on |1>..|D-1>");
            }
        }
        if (std::abs(diag[1]) <= 1e-12 * std::abs(diag[0]) || diag[0] == Complex{0.0}) {
            throw SingularProgram("B0(z) correction needs a finite non-zero z");
        }
        return zoo::geometric_program(diag[0] / diag[1], n);
    };
    return r;
}

CorrectionRule diagonal_rule(std::size_t d) {
    CorrectionRule r{"diagonal", ProgramBasis::computational(d), std::vector<std::string>{"0"}, {}, {}};
    r.encode = [](const Operator &w) { return zoo::diagonal_program(diagonal_of(w, "diagonal")); };
    r.required = [](const Operator &target, const Operator &residual) {
        const auto t = diagonal_of(target, "diagonal");
        const auto a = diagonal_of(residual, "diagonal");
        if (t.size() != a.size()) {
            throw DimensionMismatch("diagonal rule: target and residual differ in size");
        }
        double largest = 0.0;
        for (const auto &x : a) {
            largest = std::max(largest, std::abs(x));
        }
        std::vector<Complex> next(t.size());
        for (std::size_t m = 0; m < t.size(); ++m) {
            if (std::abs(a[m]) <= 1e-12 * largest) {
                throw SingularProgram("applied diagonal entry " + std::to_string(m) + " is zero");
            }
            next[m] = t[m] / a[m];
        }
        return Operator::diagonal(next);
    };
    return r;
}

CorrectionRule qid2_rule() {
    CorrectionRule r{"qid2", zoo::qid2_basis(), std::vector<std::string>{"0+"}, {}, {}};
    r.encode = [](const Operator &w) {
        if (w.rows() != 2 || w.cols() != 2) {
            throw DimensionMismatch("qid2 rule acts on a qubit");
        }
        const auto &m = w.matrix();
        const double det = std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
        if (det <= 1e-24 * std::pow(w.frobenius_norm(), 4)) {
            throw SingularOperator("qid2 rule: singular operation");
        }
        const Operator u = Complex{1.0 / std::sqrt(det)} * w;
        return zoo::su2_program(su2_log(u).mu);
    };
    return r;
}

CorrectionRule qidN_rule(std::size_t n) {
    CorrectionRule r{"qidN", zoo::phi_basis(n), std::vector<std::string>{"0,0"}, {}, {}};
    r.encode = [](const Operator &w) { return zoo::program_for(w); };
    return r;
}

std::string status_name(LoopStatus s) {
    switch (s) {
    case LoopStatus::Succeeded:
        return "succeeded";
    case LoopStatus::Exhausted:
        return "exhausted";
    case LoopStatus::Uncorrectable:
        return "uncorrectable";
    }
    return "unknown";
}

bool LoopPolicy::is_success(const CorrectionRule &rule, std::size_t round, const std::string &label) const {
    if (success_labels.empty()) {
        return rule.is_success_label(label);
    }
    const auto &set = success_labels[std::min(round, success_labels.size() - 1)];
    return std::find(set.begin(), set.end(), label) != set.end();
}

LoopTrace run_loop(const ProcessorDefinition &proc, const Ket &psi, const Operator &target,
                   const CorrectionRule &rule, const LoopPolicy &policy, RngStream &rng) {
    if (!psi.is_normalized()) {
        throw InvalidParameter("run_loop needs a normalized data state");
    }
    if (policy.max_rounds == 0) {
        throw InvalidParameter("max_rounds must be at least 1");
    }
    LoopTrace trace;
    Operator residual = Operator::identity(proc.data_dim());
    Ket state = psi;
    for (std::size_t round = 0; round < policy.max_rounds; ++round) {
        Operator needed;
        std::optional<ProgramState> program;
        try {
            needed = rule.required_operation(target, residual);
            program.emplace(rule.encode(needed));
        } catch (const SingularOperator &) {
            trace.status = LoopStatus::Uncorrectable;
            return trace;
        } catch (const SingularProgram &) {
            trace.status = LoopStatus::Uncorrectable;
            return trace;
        }
        BranchDecomposition dec = decompose(proc, state, *program, rule.measurement);
        const std::size_t i = sample_branch(dec, rng);
        Branch &b = dec.branches[i];
        state = *b.post_state;
        const bool ok = policy.is_success(rule, round, b.label) ||
                        (policy.accept_equivalent_branches && proportionality(needed, b.op, policy.tol));
        trace.rounds.push_back({std::move(*program), b.label, b.probability, state});
        if (ok) {
            trace.status = LoopStatus::Succeeded;
            return trace;
        }
        residual = normalized_residual(b.op * residual);
    }
    trace.status = LoopStatus::Exhausted;
    return trace;
}

double exact_success(const ProcessorDefinition &proc, const Ket &psi, const Operator &target,
                     const CorrectionRule &rule, std::size_t rounds, const LoopPolicy &policy,
                     const ExactOptions &options) {
    if (!psi.is_normalized()) {
        throw InvalidParameter("exact_success needs a normalized data state");
    }
    struct Node {
        double weight;
        Operator residual;
        Ket state;
    };
    std::vector<Node> frontier{{1.0, Operator::identity(proc.data_dim()), psi}};
    double success = 0.0;

    for (std::size_t round = 0; round < rounds && !frontier.empty(); ++round) {
        std::vector<Node> children;
        std::vector<double> reference;
        std::vector<bool> reference_ok;
        bool uniform = true;
        for (const Node &node : frontier) {
            Operator needed;
            std::optional<ProgramState> program;
            try {
                needed = rule.required_operation(target, node.residual);
                program.emplace(rule.encode(needed));
            } catch (const SingularOperator &) {
                uniform = false;
                continue;
            } catch (const SingularProgram &) {
                uniform = false;
                continue;
            }
            const BranchDecomposition dec = decompose(proc, node.state, *program, rule.measurement);
            std::vector<double> probs;
            std::vector<bool> oks;
            for (const Branch &b : dec.branches) {
                probs.push_back(b.probability);
                const bool ok = b.probability >= kBranchCutoff &&
                                (policy.is_success(rule, round, b.label) ||
                                 (policy.accept_equivalent_branches && proportionality(needed, b.op, policy.tol)));
                oks.push_back(ok);
                if (b.probability < kBranchCutoff) {
                    continue;
                }
                if (ok) {
                    success += node.weight * b.probability;
                } else if (round + 1 < rounds) {
                    children.push_back({node.weight * b.probability, normalized_residual(b.op * node.residual),
                                        *b.post_state});
                }
            }
            if (reference.empty()) {
                reference = probs;
                reference_ok = oks;
            } else {
                uniform = uniform && oks == reference_ok;
                for (std::size_t i = 0; i < probs.size(); ++i) {
                    if (std::abs(probs[i] - reference[i]) > options.uniform_tol) {
                        uniform = false;
                    }
                }
            }
        }
        if (children.size() > options.max_frontier) {
            if (!uniform) {
                throw std::length_error("outcome tree too large and not uniform; cannot evaluate exactly");
            }
            double total = 0.0;
            for (const auto &c : children) {
                total += c.weight;
            }
            std::vector<Node> kept;
            const std::size_t keep = options.max_frontier;
            for (std::size_t i = 0; i < keep; ++i) {
                Node c = children[i * children.size() / keep];
                c.weight = total / static_cast<double>(keep);
                kept.push_back(std::move(c));
            }
            children = std::move(kept);
        }
        frontier = std::move(children);
    }
    return success;
}

} // namespace qproc::loop
