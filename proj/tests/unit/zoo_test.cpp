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
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qproc/closed_form.hpp"
#include "qproc/error.hpp"
#include "qproc/random.hpp"
#include "qproc/zoo.hpp"

namespace qproc {
namespace {

constexpr double kPi = std::numbers::pi;

double success_mass(const BranchDecomposition &dec, std::size_t first_failure) {
    double s = 0.0;
    for (std::size_t i = 0; i < first_failure; ++i) {
        s += dec.branches[i].probability;
    }
    return s;
}

bool proportional_to(const Operator &op, const Operator &target, double tol = 1e-9) {
    return proportionality(target, op, tol).has_value();
}

// --- single CNOT ---------------------------------------------------------

TEST(U1Cnot, BranchZeroIsScaledRotation) {
    const auto p = zoo::u1_cnot();
    const auto basis = ProgramBasis::computational(2);
    for (int i = 0; i < 64; ++i) {
        const double alpha = 2.0 * kPi * i / 64.0;
        const auto ops = branch_operators(p, zoo::u1_program(alpha), basis);
        const Operator scaled = Complex{std::sqrt(2.0)} * ops[0];
        EXPECT_TRUE(is_unitary(scaled, 1e-12));
        EXPECT_LE((scaled - zoo::u_rotation(alpha)).frobenius_norm(), 1e-12);
        EXPECT_LE((Complex{std::sqrt(2.0)} * ops[1] - zoo::u_rotation(-alpha)).frobenius_norm(), 1e-12);
    }
}

TEST(U1Cnot, ZeroAngleGivesIdentityBranches) {
    const auto ops = branch_operators(zoo::u1_cnot(), zoo::u1_program(0.0), ProgramBasis::computational(2));
    EXPECT_TRUE(proportional_to(ops[0], Operator::identity(2)));
    EXPECT_TRUE(proportional_to(ops[1], Operator::identity(2)));
}

TEST(U1Cnot, SecondRoundWithDoubledAngleCorrects) {
    const double alpha = 0.37;
    const auto basis = ProgramBasis::computational(2);
    const auto fail = branch_operators(zoo::u1_cnot(), zoo::u1_program(alpha), basis)[1];
    const auto fix = branch_operators(zoo::u1_cnot(), zoo::u1_program(2 * alpha), basis)[0];
    EXPECT_LE((Complex{2.0} * fix * fail - zoo::u_rotation(alpha)).frobenius_norm(), 1e-12);
}

// --- CNOT + Toffoli ------------------------------------------------------

TEST(Vmc3, MatchesBruteForceCircuit) {
    EXPECT_EQ((zoo::vmc3().unitary() - oracle::cnot_toffoli_circuit()).frobenius_norm(), 0.0);
}

TEST(Vmc3, BranchOperatorsAtPointThree) {
    const double a = 0.3;
    const Operator g = oracle::cnot_toffoli_circuit();
    const Ket xi = zoo::vmc3_program(a).ket();
    const Operator u = zoo::u_rotation(a);
    const Operator expected[4] = {Complex{0.5} * std::polar(1.0, 2 * a) * u, Complex{0.5} * std::polar(1.0, -2 * a) * u,
                                  Complex{0.5} * u, Complex{0.5} * zoo::u_rotation(-3 * a)};
    const auto ops = branch_operators(zoo::vmc3(), zoo::vmc3_program(a), ProgramBasis::computational(4));
    for (std::size_t j = 0; j < 4; ++j) {
        const Operator brute = oracle::branch_by_sum(g, 2, 4, xi, Ket::basis(4, j));
        EXPECT_LE((brute - expected[j]).frobenius_norm(), 1e-14) << j;
        EXPECT_LE((ops[j] - expected[j]).frobenius_norm(), 1e-14) << j;
    }
}

TEST(Vmc3, ProgramIsProductEncoding) {
    const double a = 0.9;
    const Ket xi = zoo::vmc3_program(a).ket();
    const Complex expect[4] = {std::polar(0.5, 3 * a), std::polar(0.5, -a), std::polar(0.5, a), std::polar(0.5, -3 * a)};
    for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_NEAR(std::abs(xi[j] - expect[j]), 0.0, 1e-15);
    }
}

TEST(Vmc3, ThreeQuartersOnAlphaGrid) {
    RngStream rng(12);
    const auto p = zoo::vmc3();
    const auto basis = ProgramBasis::computational(4);
    for (int i = 0; i < 64; ++i) {
        const double alpha = 2.0 * kPi * i / 64.0;
        const auto dec = decompose(p, haar_ket(2, rng), zoo::vmc3_program(alpha), basis);
        EXPECT_NEAR(success_mass(dec, 3), 0.75, 1e-12);
        for (std::size_t j = 0; j < 3; ++j) {
            const Operator r = Complex{2.0} * dec.branches[j].op * dagger(zoo::u_rotation(alpha));
            EXPECT_TRUE(proportional_to(r, Operator::identity(2))) << alpha;
            EXPECT_NEAR(std::abs(r(0, 0)), 1.0, 1e-12);
        }
    }
}

TEST(Vmc3, ZeroAngleGivesIdentityBranches) {
    const auto ops = branch_operators(zoo::vmc3(), zoo::vmc3_program(0.0), ProgramBasis::computational(4));
    for (const auto &op : ops) {
        EXPECT_TRUE(proportional_to(op, Operator::identity(2)));
    }
}

TEST(Vmc3, SequentialPhaseProgramDoesNotRealizeTarget) {
    // e^{i(3-2j)a}/2 swaps the amplitudes of program states 1 and 2; outcome 0
    // then applies e^{ia} U(2a)/2 instead of something proportional to U(a).
    const double a = 0.3;
    const auto ops =
        branch_operators(zoo::vmc3(), zoo::vmc3_program_sequential_phases(a), ProgramBasis::computational(4));
    std::size_t realizing = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        realizing += proportional_to(ops[j], zoo::u_rotation(a)) ? 1 : 0;
    }
    EXPECT_EQ(realizing, 0U);
    EXPECT_LE((ops[0] - Complex{0.5} * std::polar(1.0, a) * zoo::u_rotation(2 * a)).frobenius_norm(), 1e-14);
}

// --- cyclic shift / B(z) -------------------------------------------------

TEST(CyclicShift, BranchesProportionalToB) {
    const Complex z{0.4, -0.9};
    for (std::size_t n : {2U, 3U, 6U}) {
        const auto ops = branch_operators(zoo::cyclic_shift_processor(n), zoo::geometric_program(z, n),
                                          ProgramBasis::computational(n));
        const double c0 = std::sqrt(zoo::geometric_norm_squared(z, n));
        Complex zj = 1.0;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            EXPECT_LE((ops[j] - (c0 * zj) * zoo::b_operator(z)).frobenius_norm(), 1e-13);
            zj *= z;
        }
        const Operator last = Complex{c0} * Operator::diagonal({zj, 1.0});
        EXPECT_LE((ops[n - 1] - last).frobenius_norm(), 1e-13);
    }
}

TEST(CyclicShift, AveragedSuccessIsPointSeven) {
    const Complex z{std::sqrt(0.5), 0.0};
    const auto p = zoo::cyclic_shift_processor(4);
    const auto xi = zoo::geometric_program(z, 4);
    const auto basis = ProgramBasis::computational(4);
    // Success is linear in |alpha|^2, so the Haar average is the mean over |0>, |1>.
    const double avg = 0.5 * (success_mass(decompose(p, Ket::basis(2, 0), xi, basis), 3) +
                              success_mass(decompose(p, Ket::basis(2, 1), xi, basis), 3));
    EXPECT_NEAR(avg, 0.7, 1e-12);
}

TEST(CyclicShift, UnitCaseGivesOneMinusOneOverN) {
    RngStream rng(13);
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto dec = decompose(zoo::cyclic_shift_processor(n), haar_ket(2, rng), zoo::geometric_program(1.0, n),
                                   ProgramBasis::computational(n));
        EXPECT_NEAR(success_mass(dec, n - 1), 1.0 - 1.0 / n, 1e-12);
    }
    EXPECT_NEAR(zoo::geometric_norm_squared(Complex{0.0, 1.0}, 5), 0.2, 1e-15);
}

TEST(CyclicShift, ThreeDimProgramWithZTwo) {
    const double h = 1.0 / std::sqrt(2.0);
    const auto dec = decompose(zoo::cyclic_shift_processor(3), Ket{h, h}, zoo::geometric_program(2.0, 3),
                               ProgramBasis::computational(3));
    // (1 - 16)/(1 - 64) * (1/2 + 4/2) = 25/42
    EXPECT_NEAR(success_mass(dec, 2), 25.0 / 42.0, 1e-12);
}

TEST(CyclicShift, ZeroZIsRejected) {
    EXPECT_THROW((void)zoo::geometric_program(0.0, 3), InvalidParameter);
    EXPECT_THROW((void)zoo::cyclic_shift_processor(1), InvalidParameter);
}

TEST(CyclicShift, ClosedFormMatchesBranchSum) {
    RngStream rng(14);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 7);
        const Complex z = std::polar(0.2 + 1.8 * rng.uniform(), 2 * kPi * rng.uniform());
        const Ket psi = haar_ket(2, rng);
        const auto dec = decompose(zoo::cyclic_shift_processor(n), psi, zoo::geometric_program(z, n),
                                   ProgramBasis::computational(n));
        const double closed = zoo::closed_form(zoo::BzFiniteParams{z, n, std::norm(psi[0])}).value;
        EXPECT_NEAR(success_mass(dec, n - 1), closed, 1e-10);
    }
}

// --- qudit diagonal --------------------------------------------------------

TEST(QuditDiagonal, UniformProgramGivesIdentityThirds) {
    const double a = 1.0 / std::sqrt(3.0);
    RngStream rng(15);
    const auto dec = decompose(zoo::qudit_diagonal_processor(3), haar_ket(3, rng), ProgramState(Ket{a, a, a}),
                               ProgramBasis::computational(3));
    for (const auto &b : dec.branches) {
        EXPECT_NEAR(b.probability, 1.0 / 3.0, 1e-12);
        EXPECT_TRUE(proportional_to(b.op, Operator::identity(3)));
    }
}

TEST(QuditDiagonal, BasisProgramIsProjector) {
    const auto ops =
        branch_operators(zoo::qudit_diagonal_processor(3), ProgramState(Ket::basis(3, 0)), ProgramBasis::computational(3));
    EXPECT_EQ((ops[0] - Operator::diagonal({1.0, 0.0, 0.0})).frobenius_norm(), 0.0);
    EXPECT_EQ((ops[2] - Operator::diagonal({0.0, 1.0, 0.0})).frobenius_norm(), 0.0);
}

TEST(QuditDiagonal, BranchesAreCyclicShiftsOfProgram) {
    const auto xi = zoo::diagonal_program({0.8, Complex{0.36, 0.48}, Complex{0.2, -0.1}});
    const auto &c = xi.ket();
    const auto ops = branch_operators(zoo::qudit_diagonal_processor(3), xi, ProgramBasis::computational(3));
    EXPECT_LE((ops[0] - Operator::diagonal({c[0], c[1], c[2]})).frobenius_norm(), 1e-15);
    EXPECT_LE((ops[1] - Operator::diagonal({c[1], c[2], c[0]})).frobenius_norm(), 1e-15);
    EXPECT_LE((ops[2] - Operator::diagonal({c[2], c[0], c[1]})).frobenius_norm(), 1e-15);
}

// --- amplitude modifier ------------------------------------------------------

TEST(AmpModifier, UnitModulusGivesNMinusOneOverN) {
    RngStream rng(16);
    for (std::size_t d : {2U, 3U, 5U}) {
        for (std::size_t n : {2U, 3U, 4U, 7U}) {
            const Complex z = std::polar(1.0, 2 * kPi * rng.uniform());
            const auto dec = decompose(zoo::amp_modifier_processor(d, n), haar_ket(d, rng), zoo::geometric_program(z, n),
                                       ProgramBasis::computational(n));
            EXPECT_NEAR(success_mass(dec, n - 1), (n - 1.0) / n, 1e-12);
        }
    }
}

TEST(AmpModifier, BranchesProportionalToB0) {
    const Complex z{0.7, 0.2};
    const auto ops = branch_operators(zoo::amp_modifier_processor(3, 4), zoo::geometric_program(z, 4),
                                      ProgramBasis::computational(4));
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_TRUE(proportional_to(ops[j], zoo::b0_operator(z, 3)));
    }
    EXPECT_EQ((zoo::b0_operator(1.0, 4) - Operator::identity(4)).frobenius_norm(), 0.0);
}

TEST(AmpModifier, ClosedFormMatchesBranchSum) {
    const double a = 1.0 / std::sqrt(3.0);
    const Ket psi{a, a, a};
    const auto dec = decompose(zoo::amp_modifier_processor(3, 4), psi, zoo::geometric_program(0.7, 4),
                               ProgramBasis::computational(4));
    const double b0 = apply(zoo::b0_operator(0.7, 3), psi).norm_squared();
    EXPECT_NEAR(success_mass(dec, 3), zoo::closed_form(zoo::B0QuditParams{0.7, 4, b0}).value, 1e-10);
}

// --- qubit QID -----------------------------------------------------------------

TEST(Qid2, BranchesAreConjugatedTargets) {
    RngStream rng(18);
    for (int t = 0; t < 20; ++t) {
        const Vec3 mu{rng.normal(), rng.normal(), rng.normal()};
        const Operator u = su2_exp(mu);
        const auto ops = branch_operators(zoo::qid2(), zoo::su2_program(mu), zoo::qid2_basis());
        const int sigma_of[4] = {0, 3, 1, 2}; // 0+, 0-, 1+, 1-
        for (std::size_t b = 0; b < 4; ++b) {
            const Operator s = sigma(sigma_of[b]);
            const Operator expected = Complex{0.5} * s * u * s;
            EXPECT_LE(distance_up_to_phase(ops[b], expected), 1e-12);
        }
        EXPECT_LE((ops[0] - Complex{0.5} * u).frobenius_norm(), 1e-12);
    }
}

TEST(Qid2, ZeroMuGivesIdentity) {
    for (const auto &op : branch_operators(zoo::qid2(), zoo::su2_program({0, 0, 0}), zoo::qid2_basis())) {
        EXPECT_TRUE(proportional_to(op, Operator::identity(2)));
    }
}

TEST(Qid2, ZAxisProgram) {
    const double a = 0.45;
    const auto ops = branch_operators(zoo::qid2(), zoo::su2_program({0, 0, a}), zoo::qid2_basis());
    EXPECT_LE((ops[0] - Complex{0.5} * zoo::u_rotation(a)).frobenius_norm(), 1e-14);
    EXPECT_LE((ops[2] - Complex{0.5} * zoo::u_rotation(-a)).frobenius_norm(), 1e-14);
}

TEST(Qid2, PauliConjugationIdentity) {
    for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
            if (j != k) {
                EXPECT_EQ((sigma(j) * sigma(k) * sigma(j) + sigma(k)).frobenius_norm(), 0.0);
            }
        }
    }
}

// --- qudit QID -----------------------------------------------------------------

TEST(ConditionalShift, QubitIsCnot) {
    Operator cnot(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    EXPECT_EQ((zoo::conditional_shift(2, zoo::ShiftDirection::Forward) - cnot).frobenius_norm(), 0.0);
    EXPECT_EQ((zoo::conditional_shift(2, zoo::ShiftDirection::Backward) - cnot).frobenius_norm(), 0.0);
}

TEST(ConditionalShift, QutritDirections) {
    const Ket in = tensor(Ket::basis(3, 1), Ket::basis(3, 1));
    const Ket fwd = apply(zoo::conditional_shift(3, zoo::ShiftDirection::Forward), in);
    const Ket bwd = apply(zoo::conditional_shift(3, zoo::ShiftDirection::Backward), in);
    EXPECT_EQ((fwd - tensor(Ket::basis(3, 1), Ket::basis(3, 2))).norm(), 0.0);
    EXPECT_EQ((bwd - tensor(Ket::basis(3, 1), Ket::basis(3, 0))).norm(), 0.0);
    const Operator d = zoo::conditional_shift(3, zoo::ShiftDirection::Forward);
    EXPECT_EQ((dagger(d) - zoo::conditional_shift(3, zoo::ShiftDirection::Backward)).frobenius_norm(), 0.0);
}

TEST(QidN, NetworkBasisAction) {
    for (std::size_t n : {2U, 3U}) {
        const Operator p = zoo::qid_network(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const Ket in = tensor(tensor(Ket::basis(n, a), Ket::basis(n, b)), Ket::basis(n, c));
                    const Ket out = tensor(tensor(Ket::basis(n, (a + n - b + c) % n), Ket::basis(n, (a + b) % n)),
                                           Ket::basis(n, (c + a) % n));
                    EXPECT_EQ((apply(p, in) - out).norm(), 0.0);
                }
    }
}

TEST(QidN, CovarianceForEveryBellState) {
    RngStream rng(19);
    for (std::size_t n : {2U, 3U}) {
        const Operator p = zoo::qid_network(n);
        const Ket psi = haar_ket(n, rng);
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t k = 0; k < n; ++k) {
                const Ket xi = zoo::bell_state(m, k, n);
                const Ket lhs = apply(p, tensor(psi, xi));
                const Ket rhs = tensor(apply(zoo::weyl(m, k, n), psi), xi);
                EXPECT_LE((lhs - rhs).norm(), 1e-12);
            }
    }
}

TEST(QidN, ZeroIndexWeylAndBell) {
    EXPECT_EQ((zoo::weyl(0, 0, 4) - Operator::identity(4)).frobenius_norm(), 0.0);
    const Ket b = zoo::bell_state(0, 0, 3);
    for (std::size_t i = 0; i < 9; ++i) {
        const double expect = (i % 4 == 0) ? 1.0 / std::sqrt(3.0) : 0.0;
        EXPECT_NEAR(std::abs(b[i] - expect), 0.0, 1e-15);
    }
}

TEST(QidN, WeylOrthogonality) {
    const std::size_t n = 3;
    for (std::size_t a = 0; a < n * n; ++a)
        for (std::size_t b = 0; b < n * n; ++b) {
            const Complex tr = hs_inner(zoo::weyl(a / n, a % n, n), zoo::weyl(b / n, b % n, n));
            EXPECT_NEAR(std::abs(tr - (a == b ? Complex{3.0} : Complex{0.0})), 0.0, 1e-12);
        }
}

TEST(QidN, WeylConjugationRelation) {
    for (std::size_t n : {2U, 3U, 4U}) {
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Operator upq = zoo::weyl(p, q, n);
                        const Operator umk = zoo::weyl(m, k, n);
                        const double phase = 2 * kPi * (static_cast<double>(m * q) - static_cast<double>(k * p)) / n;
                        EXPECT_LE((dagger(upq) * umk * upq - std::polar(1.0, phase) * umk).frobenius_norm(), 1e-12);
                    }
    }
}

TEST(QidN, PhiBasisOrthonormalAndFactorized) {
    for (std::size_t n : {2U, 3U, 4U}) {
        const auto basis = zoo::phi_basis(n); // constructor checks the Gram matrix
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                EXPECT_LE(distance_up_to_phase(zoo::phi_state(r, s, n), zoo::phi_factorized(r, s, n)), 1e-12);
                EXPECT_LE((zoo::phi_state(r, s, n) - zoo::phi_factorized(r, s, n)).norm(), 1e-12);
            }
        EXPECT_EQ(basis.labels()[1], "0,1");
    }
}

TEST(WeylExpansion, BasisOperatorsAndIdentity) {
    const auto d = zoo::weyl_expansion(zoo::weyl(2, 1, 3));
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_NEAR(std::abs(d[i] - (i == 2 * 3 + 1 ? Complex{1.0} : Complex{0.0})), 0.0, 1e-14);
    }
    const auto e = zoo::weyl_expansion(Operator::identity(3));
    EXPECT_NEAR(std::abs(e[0] - Complex{1.0}), 0.0, 1e-14);
    EXPECT_THROW((void)zoo::weyl_expansion(Operator(3, 3)), ZeroOperator);
    EXPECT_THROW((void)zoo::program_for(Operator(2, 2)), ZeroOperator);
}

TEST(WeylExpansion, ReconstructsRandomUnitary) {
    RngStream rng(20);
    const Operator v = haar_unitary(3, rng);
    const auto d = zoo::weyl_expansion(v);
    Operator sum(3, 3);
    for (std::size_t m = 0; m < 3; ++m)
        for (std::size_t n = 0; n < 3; ++n) {
            sum += d[m * 3 + n] * zoo::weyl(m, n, 3);
        }
    EXPECT_LE((sum - v).frobenius_norm(), 1e-10);
}

TEST(WeylExpansion, ProgramForRecordsScale) {
    const Operator v = Operator::diagonal({2.0, 1.0, 0.5});
    const auto xi = zoo::program_for(v);
    const auto &enc = std::get<WeylEncoding>(xi.encoding());
    EXPECT_NEAR(enc.scale, std::sqrt((4.0 + 1.0 + 0.25) / 3.0), 1e-14);
    double total = 0.0;
    for (const auto &c : enc.coefficients) {
        total += std::norm(c);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(QidNBranches, ConjugationFormula) {
    RngStream rng(21);
    for (std::size_t n : {2U, 3U}) {
        const Operator v = haar_unitary(n, rng);
        const Ket psi = haar_ket(n, rng);
        const auto dec = zoo::qidN_branches(v, psi);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                const Operator u = zoo::weyl(s, r, n);
                const Operator expected = Complex{1.0 / n} * u * v * dagger(u);
                const auto &b = dec.branches[r * n + s];
                EXPECT_LE((b.op - expected).frobenius_norm(), 1e-9);
                EXPECT_NEAR(b.probability, 1.0 / (n * n), 1e-12);
            }
        EXPECT_TRUE(proportional_to(dec.at("0,0").op, v));
    }
}

TEST(QidNBranches, IdentityTarget) {
    const auto dec = zoo::qidN_branches(Operator::identity(3), Ket::basis(3, 2));
    for (const auto &b : dec.branches) {
        EXPECT_TRUE(proportional_to(b.op, Operator::identity(3)));
    }
}

TEST(QidNBranches, HadamardQubit) {
    const double h = 1.0 / std::sqrt(2.0);
    const Operator had = Operator::from_rows({{h, h}, {h, -h}});
    const Ket psi{0.6, Complex{0.0, 0.8}};
    const auto dec = zoo::qidN_branches(had, psi);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) {
            // explicit 2x2 Weyl matrices: U^(s,r) = Z^s-type phase times X^r shift
            Operator u(2, 2);
            for (std::size_t t = 0; t < 2; ++t) {
                u((t + 2 - r) % 2, t) = std::polar(1.0, -kPi * static_cast<double>(t * s));
            }
            const Operator expected = Complex{0.5} * u * had * dagger(u);
            EXPECT_LE((dec.branches[r * 2 + s].op - expected).frobenius_norm(), 1e-12);
            EXPECT_NEAR(dec.branches[r * 2 + s].probability, 0.25, 1e-12);
        }
}

TEST(ZooProperty, EveryConstructorIsComplete) {
    std::vector<ProcessorDefinition> all = {zoo::u1_cnot(), zoo::vmc3(), zoo::qid2()};
    for (std::size_t n = 2; n <= 8; ++n) {
        all.push_back(zoo::cyclic_shift_processor(n));
        all.push_back(zoo::qudit_diagonal_processor(n));
        all.push_back(zoo::amp_modifier_processor(3, n));
    }
    for (std::size_t n = 2; n <= 5; ++n) {
        all.push_back(zoo::qidN(n));
    }
    for (const auto &p : all) {
        const auto c = p.completeness();
        EXPECT_LE(c.column_residual, 1e-9) << p.label();
        EXPECT_LE(c.row_residual, 1e-9) << p.label();
    }
}

} // namespace
} // namespace qproc
