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
 * Concrete processors, program encoders and measurement bases.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "qproc/linalg.hpp"
#include "qproc/processor.hpp"

namespace qproc::zoo {

// Target operations.

/// U(alpha) = exp(i alpha sigma_z) = diag(e^{i alpha}, e^{-i alpha}).
Operator u_rotation(double alpha);
/// B(z) = |0><0| + z |1><1|.
Operator b_operator(Complex z);
/// B0(z) = z |0><0| + sum_{k>=1} |k><k| on a D-dimensional space.
Operator b0_operator(Complex z, std::size_t dim);

// Single CNOT, data qubit as control.

ProcessorDefinition u1_cnot();
/// (e^{i alpha}|0> + e^{-i alpha}|1>) / sqrt(2)
ProgramState u1_program(double alpha);

// CNOT(1 -> 2) followed by Toffoli(1, 2 -> 3). Program index = 2 * q2 + q3.

ProcessorDefinition vmc3();
/// Xi(alpha) (x) Xi(2 alpha) = (e^{3ia}, e^{-ia}, e^{ia}, e^{-3ia}) / 2.
ProgramState vmc3_program(double alpha);
/// The phase sequence e^{i(3 - 2j) alpha} / 2 for j = 0..3. Its branches are
/// not proportional to U(alpha); kept to document the mismatch.
ProgramState vmc3_program_sequential_phases(double alpha);

// Cyclic-shift processor: A_jk = delta_{j,k}|0><0| + delta_{j+1 mod N, k}|1><1|.

ProcessorDefinition cyclic_shift_processor(std::size_t n);
/// |c0|^2 = 1 / sum_{k<N} |z|^{2k}.
double geometric_norm_squared(Complex z, std::size_t n);
/// c0 sum_j z^j |j> with c0 > 0. Throws InvalidParameter for z = 0 or N < 2.
ProgramState geometric_program(Complex z, std::size_t n);

// Qudit diagonal processor: A_jk = |(k - j) mod D><(k - j) mod D|.

ProcessorDefinition qudit_diagonal_processor(std::size_t d);
/// Normalized program with c_k proportional to entries[k].
ProgramState diagonal_program(const std::vector<Complex> &entries);

// Amplitude modifier: A_jk = delta_{jk} X + delta_{k, j+1 mod N} |0><0|,
// X the projector onto span{|1>..|D-1>}.

ProcessorDefinition amp_modifier_processor(std::size_t d, std::size_t n);

// Qubit quantum information distributor, G = sum_j sigma_j (x) |Xi_j><Xi_j|.

/// Bell vector paired with sigma_j: 0 -> Xi_0, 1 -> Xi_x, 2 -> Xi_y, 3 -> Xi_z.
Ket qid2_bell(int j);
ProcessorDefinition qid2();
/// cos|mu| Xi_0 + i sinc|mu| (mu_x Xi_x + mu_y Xi_y + mu_z Xi_z).
ProgramState su2_program(const Vec3 &mu);
/// {|0+>, |0->, |1+>, |1->} labelled "0+", "0-", "1+", "1-".
ProgramBasis qid2_basis();

// Qudit quantum information distributor.

enum class ShiftDirection { Forward, Backward };

/// sum_{k,m} |k><k| (x) |(m +- k) mod N><m|, control first.
Operator conditional_shift(std::size_t n, ShiftDirection dir);
/// P_123 = D_31 D_21^dag D_13 D_12 on qudits (1, 2, 3), qudit 1 most significant.
Operator qid_network(std::size_t n);
ProcessorDefinition qidN(std::size_t n);

/// |Xi_mn> = N^{-1/2} sum_k e^{2 pi i m k / N} |k>|(k - n) mod N>.
Ket bell_state(std::size_t m, std::size_t n, std::size_t dim);
/// U^(m,n) = sum_s e^{-2 pi i s m / N} |(s - n) mod N><s|.
Operator weyl(std::size_t m, std::size_t n, std::size_t dim);
/// |Phi_rs> = N^{-1} sum_{mn} e^{2 pi i (m r - n s) / N} |Xi_mn>.
Ket phi_state(std::size_t r, std::size_t s, std::size_t dim);
/// |-r> (x) N^{-1/2} sum_n e^{2 pi i n s / N} |n - r>.
Ket phi_factorized(std::size_t r, std::size_t s, std::size_t dim);
/// Phi basis, index r * N + s, labelled "r,s".
ProgramBasis phi_basis(std::size_t dim);

/// d_mn = Tr[(U^(m,n))^dag V] / N at index m * N + n. Throws ZeroOperator.
std::vector<Complex> weyl_expansion(const Operator &v);
/// sum_mn d_mn |Xi_mn> for V rescaled to Frobenius norm sqrt(N); the
/// discarded factor is kept as WeylEncoding::scale.
ProgramState program_for(const Operator &v);
BranchDecomposition qidN_branches(const Operator &v, const Ket &psi);

} // namespace qproc::zoo
