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
#include <functional>
#include <iomanip>
#include <ostream>

#include "qproc/closed_form.hpp"
#include "qproc/error.hpp"
#include "qproc/experiments.hpp"
#include "qproc/random.hpp"
#include "qproc/zoo.hpp"

namespace qproc::experiments {

namespace {

struct Suite {
    std::string name;
    std::vector<std::pair<std::string, std::function<bool()>>> checks;
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Suite linalg_suite() {
    Suite s{"linalg", {}};
    s.checks.emplace_back("kronecker index convention", [] {
        const Operator k = tensor(sigma_x(), sigma_z());
        return k(0, 2) == Complex{1.0} && k(1, 3) == Complex{-1.0} && k(0, 0) == Complex{0.0};
    });
    s.checks.emplace_back("conditional shift is unitary", [] {
        const Operator d = zoo::conditional_shift(3, zoo::ShiftDirection::Forward);
        return (dagger(d) * d - Operator::identity(9)).frobenius_norm() == 0.0;
    });
    s.checks.emplace_back("su2 log inverts exp", [] {
        RngStream rng(1);
        for (int t = 0; t < 50; ++t) {
            const Operator u = haar_unitary(2, rng);
            const auto l = su2_log(u);
            if ((std::polar(1.0, l.phase) * su2_exp(l.mu) - u).frobenius_norm() > 1e-9) {
                return false;
            }
        }
        return true;
    });
    s.checks.emplace_back("inverse of random operator", [] {
        RngStream rng(2);
        const Operator g = ginibre(4, 4, rng);
        return (g * inverse(g) - Operator::identity(4)).frobenius_norm() < 1e-9;
    });
    return s;
}

Suite processor_suite(bool fault) {
    Suite s{"processor_core", {}};
    s.checks.emplace_back("blocks reassemble into a unitary", [fault] {
        const auto p = zoo::qid2();
        BlockGrid grid(p.program_dim(), std::vector<Operator>(p.program_dim()));
        for (std::size_t j = 0; j < p.program_dim(); ++j) {
            for (std::size_t k = 0; k < p.program_dim(); ++k) {
                grid[j][k] = p.block(j, k);
            }
        }
        if (fault) {
            grid[0][0](0, 0) += 1e-3;
        }
        try {
            (void)ProcessorDefinition::assemble(grid, "qid2-reassembled");
        } catch (const Error &) {
            return false;
        }
        return true;
    });
    s.checks.emplace_back("completeness of every zoo processor", [] {
        std::vector<ProcessorDefinition> all = {zoo::u1_cnot(), zoo::vmc3(), zoo::qid2(), zoo::qidN(3)};
        for (std::size_t n = 2; n <= 5; ++n) {
            all.push_back(zoo::cyclic_shift_processor(n));
            all.push_back(zoo::qudit_diagonal_processor(n));
            all.push_back(zoo::amp_modifier_processor(3, n));
        }
        for (const auto &p : all) {
            const auto c = p.completeness();
            if (c.column_residual > kTolProcessor || c.row_residual > kTolProcessor) {
                return false;
            }
        }
        return true;
    });
    s.checks.emplace_back("branch probabilities sum to one", [] {
        RngStream rng(3);
        for (int t = 0; t < 20; ++t) {
            const auto dec =
                decompose(zoo::qidN(3), haar_ket(3, rng), zoo::program_for(haar_unitary(3, rng)), zoo::phi_basis(3));
            if (!near(dec.total_probability(), 1.0, 1e-12)) {
                return false;
            }
        }
        return true;
    });
    s.checks.emplace_back("seeded sampling is reproducible", [] {
        const auto dec = decompose(zoo::qid2(), Ket{0.6, 0.8}, zoo::su2_program({0.1, 0.2, 0.3}), zoo::qid2_basis());
        RngStream a(5);
        RngStream b(5);
        for (int t = 0; t < 100; ++t) {
            if (sample_branch(dec, a) != sample_branch(dec, b)) {
                return false;
            }
        }
        return true;
    });
    return s;
}

Suite zoo_suite() {
    Suite s{"processor_zoo", {}};
    s.checks.emplace_back("CNOT+Toffoli success 3/4", [] {
        const auto rule = loop::vmc3_rule();
        const auto dec = decompose(zoo::vmc3(), Ket{0.6, 0.8}, zoo::vmc3_program(0.3), rule.measurement);
        double p = 0.0;
        for (const auto &b : dec.branches) {
            if (rule.is_success_label(b.label)) {
                if (!proportionality(zoo::u_rotation(0.3), b.op, 1e-9)) {
                    return false;
                }
                p += b.probability;
            }
        }
        return near(p, 0.75, 1e-12);
    });
    s.checks.emplace_back("B(z) averaged success 0.7", [] {
        const auto p = zoo::cyclic_shift_processor(4);
        const auto xi = zoo::geometric_program(std::sqrt(0.5), 4);
        double avg = 0.0;
        for (std::size_t k = 0; k < 2; ++k) {
            const auto dec = decompose(p, Ket::basis(2, k), xi, ProgramBasis::computational(4));
            avg += 0.5 * (1.0 - dec.branches[3].probability);
        }
        return near(avg, 0.7, 1e-12);
    });
    s.checks.emplace_back("qubit QID outcomes 1/4", [] {
        const auto dec = decompose(zoo::qid2(), Ket{0.6, 0.8}, zoo::su2_program({0.4, -0.2, 1.3}), zoo::qid2_basis());
        for (const auto &b : dec.branches) {
            if (!near(b.probability, 0.25, 1e-12)) {
                return false;
            }
        }
        return true;
    });
    s.checks.emplace_back("qudit QID covariance", [] {
        const Operator p = zoo::qid_network(3);
        const Ket psi{0.6, Complex{0.0, 0.48}, 0.64};
        for (std::size_t m = 0; m < 3; ++m) {
            for (std::size_t n = 0; n < 3; ++n) {
                const Ket xi = zoo::bell_state(m, n, 3);
                if ((apply(p, tensor(psi, xi)) - tensor(apply(zoo::weyl(m, n, 3), psi), xi)).norm() > 1e-12) {
                    return false;
                }
            }
        }
        return true;
    });
    s.checks.emplace_back("Weyl operators orthogonal", [] {
        for (std::size_t a = 0; a < 16; ++a) {
            for (std::size_t b = 0; b < 16; ++b) {
                const Complex tr = hs_inner(zoo::weyl(a / 4, a % 4, 4), zoo::weyl(b / 4, b % 4, 4));
                if (std::abs(tr - (a == b ? Complex{4.0} : Complex{0.0})) > 1e-10) {
                    return false;
                }
            }
        }
        return true;
    });
    return s;
}

Suite loop_suite() {
    Suite s{"loop_engine", {}};
    s.checks.emplace_back("qubit QID loop 1-(3/4)^n", [] {
        const Operator u = su2_exp({0.2, -0.5, 0.9});
        for (std::size_t n : {1U, 2U, 30U}) {
            const double p = loop::exact_success(zoo::qid2(), Ket{0.6, 0.8}, u, loop::qid2_rule(), n, heralded_policy(n));
            if (!near(p, 1.0 - std::pow(0.75, static_cast<double>(n)), 1e-12)) {
                return false;
            }
        }
        return true;
    });
    s.checks.emplace_back("U(1) loop 1-(1/2)^n", [] {
        for (std::size_t n = 1; n <= 10; ++n) {
            const double p = loop::exact_success(zoo::u1_cnot(), Ket{0.6, 0.8}, zoo::u_rotation(0.3), loop::u1_rule(),
                                                 n, heralded_policy(n));
            if (!near(p, 1.0 - std::pow(0.5, static_cast<double>(n)), 1e-12)) {
                return false;
            }
        }
        return true;
    });
    s.checks.emplace_back("qudit correction soundness", [] {
        RngStream rng(4);
        const Operator v = haar_unitary(3, rng);
        const auto rule = loop::qidN_rule(3);
        const auto dec = decompose(zoo::qidN(3), haar_ket(3, rng), rule.encode(v), rule.measurement);
        for (const auto &fail : dec.branches) {
            if (fail.label == "0,0") {
                continue;
            }
            const auto next = branch_operators(zoo::qidN(3), rule.next_program(v, fail.op), rule.measurement);
            if (!proportionality(v, next[0] * fail.op, 1e-9)) {
                return false;
            }
        }
        return true;
    });
    s.checks.emplace_back("closed forms within [0,1]", [] {
        for (std::size_t n = 2; n <= 8; ++n) {
            for (const double r : {0.25, 0.5, 1.0, 1.5, 2.0}) {
                const double p = zoo::closed_form(zoo::BzFiniteParams{r, n, std::nullopt}).value;
                if (!(p >= 0.0 && p <= 1.0)) {
                    return false;
                }
            }
        }
        return true;
    });
    return s;
}

} // namespace

bool VerifyReport::passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

VerifyReport verify(const VerifyOptions &options) {
    VerifyReport report;
    for (const Suite &suite : {linalg_suite(), processor_suite(options.inject_fault), zoo_suite(), loop_suite()}) {
        for (const auto &[name, check] : suite.checks) {
            CheckResult r{suite.name, name, false, {}};
            try {
                r.passed = check();
            } catch (const std::exception &e) {
                r.detail = e.what();
            }
            report.checks.push_back(std::move(r));
        }
    }
    report.errata = {
        {"CNOT+Toffoli program phases", "resolved (oracle)",
         "brute-force circuit shows e^{i(3-2j)a} realizes U(2a); product encoding e^{ia}(x)e^{2ia} gives U(a)"},
        {"finite-N B(z) success ratio", "resolved (oracle)",
         "branch sums give sum_{k<N-1}|z|^{2k} / sum_{k<N}|z|^{2k}; the inverted ratio exceeds 1 for |z|<1"},
    };
    return report;
}

void print_report(std::ostream &out, const VerifyReport &r) {
    std::vector<std::string> order;
    for (const auto &c : r.checks) {
        if (order.empty() || order.back() != c.suite) {
            order.push_back(c.suite);
        }
    }
    out << std::left << std::setw(16) << "suite" << std::setw(8) << "checks" << std::setw(8) << "passed"
        << "status\n";
    for (const auto &suite : order) {
        std::size_t total = 0;
        std::size_t ok = 0;
        for (const auto &c : r.checks) {
            if (c.suite == suite) {
                ++total;
                ok += c.passed ? 1 : 0;
            }
        }
        out << std::setw(16) << suite << std::setw(8) << total << std::setw(8) << ok << (ok == total ? "ok" : "FAIL")
            << '\n';
    }
    for (const auto &c : r.checks) {
        if (!c.passed) {
            out << "  failed: " << c.suite << " / " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
                << '\n';
        }
    }
    out << "\nerrata\n";
    for (const auto &e : r.errata) {
        out << "  " << e.topic << ": " << e.status << " - " << e.note << '\n';
    }
}

} // namespace qproc::experiments
