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
#include "qproc/zoo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qproc/error.hpp"

namespace qproc::zoo {

namespace {

constexpr double kPi = std::numbers::pi;

Operator projector(std::size_t dim, std::size_t k) {
    Operator p(dim, dim);
    p(k, k) = 1.0;
    return p;
}

BlockGrid zero_grid(std::size_t n, std::size_t d) {
    return BlockGrid(n, std::vector<Operator>(n, Operator(d, d)));
}

std::size_t mod(long long a, std::size_t n) {
    const auto m = static_cast<long long>(n);
    return static_cast<std::size_t>(((a % m) + m) % m);
}

Complex root_of_unity(long long k, std::size_t n) {
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(mod(k, n)) / static_cast<double>(n));
}

/// Lifts a two-qudit operator acting on (first, second) to three qudits.
Operator embed_pair(const Operator &op, std::size_t n, int first, int second) {
    const std::size_t dim = n * n * n;
    Operator out(dim, dim);
    const int other = 3 - first - second;
    auto digits = [n](std::size_t idx) {
        return std::array<std::size_t, 3>{idx / (n * n), (idx / n) % n, idx % n};
    };
    for (std::size_t row = 0; row < dim; ++row) {
        const auto r = digits(row);
        for (std::size_t col = 0; col < dim; ++col) {
            const auto c = digits(col);
            if (r[static_cast<std::size_t>(other)] != c[static_cast<std::size_t>(other)]) {
                continue;
            }
            out(row, col) = op(r[static_cast<std::size_t>(first)] * n + r[static_cast<std::size_t>(second)],
                               c[static_cast<std::size_t>(first)] * n + c[static_cast<std::size_t>(second)]);
        }
    }
    return out;
}

void require_dim(std::size_t n, std::size_t min, const char *what) {
    if (n < min) {
        throw InvalidParameter(std::string(what) + " must be at least " + std::to_string(min));
    }
}

} // namespace

Operator u_rotation(double alpha) { return Operator::diagonal({std::polar(1.0, alpha), std::polar(1.0, -alpha)}); }

Operator b_operator(Complex z) { return Operator::diagonal({1.0, z}); }

Operator b0_operator(Complex z, std::size_t dim) {
    require_dim(dim, 2, "data dimension");
    Operator b = Operator::identity(dim);
    b(0, 0) = z;
    return b;
}

ProcessorDefinition u1_cnot() {
    const auto p0 = projector(2, 0);
    const auto p1 = projector(2, 1);
    return ProcessorDefinition::assemble({{p0, p1}, {p1, p0}}, "u1_cnot");
}

ProgramState u1_program(double alpha) {
    const double h = 1.0 / std::sqrt(2.0);
    return {Ket{h * std::polar(1.0, alpha), h * std::polar(1.0, -alpha)}, U1Encoding{alpha}};
}

ProcessorDefinition vmc3() {
    // Data |0>: program untouched. Data |1>: q2 flips, then q3 flips if q2 = 1,
    // i.e. program k -> j with 0 -> 3, 1 -> 2, 2 -> 0, 3 -> 1.
    auto grid = zero_grid(4, 2);
    const std::size_t image_of[4] = {3, 2, 0, 1};
    for (std::size_t k = 0; k < 4; ++k) {
        grid[k][k] += projector(2, 0);
        grid[image_of[k]][k] += projector(2, 1);
    }
    return ProcessorDefinition::assemble(grid, "vmc3");
}

ProgramState vmc3_program(double alpha) {
    const Ket product = tensor(u1_program(alpha).ket(), u1_program(2.0 * alpha).ket());
    return {product, U1Encoding{alpha}};
}

ProgramState vmc3_program_sequential_phases(double alpha) {
    Ket k(4);
    for (std::size_t j = 0; j < 4; ++j) {
        k[j] = 0.5 * std::polar(1.0, (3.0 - 2.0 * static_cast<double>(j)) * alpha);
    }
    return {k, U1Encoding{alpha}};
}

ProcessorDefinition cyclic_shift_processor(std::size_t n) {
    require_dim(n, 2, "program dimension");
    auto grid = zero_grid(n, 2);
    for (std::size_t j = 0; j < n; ++j) {
        grid[j][j] += projector(2, 0);
        grid[j][(j + 1) % n] += projector(2, 1);
    }
    return ProcessorDefinition::assemble(grid, "cyclic_shift_" + std::to_string(n));
}

double geometric_norm_squared(Complex z, std::size_t n) {
    const double x = std::norm(z);
    double sum = 0.0;
    double term = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        sum += term;
        term *= x;
    }
    return 1.0 / sum;
}

ProgramState geometric_program(Complex z, std::size_t n) {
    require_dim(n, 2, "program dimension");
    if (z == Complex{0.0}) {
        throw InvalidParameter("geometric program needs z != 0");
    }
    Ket k(n);
    Complex term = std::sqrt(geometric_norm_squared(z, n));
    for (std::size_t j = 0; j < n; ++j) {
        k[j] = term;
        term *= z;
    }
    // The closed-form c0 loses a few ulps for large N; renormalize.
    return {k.normalized(), GeometricEncoding{z, n}};
}

ProcessorDefinition qudit_diagonal_processor(std::size_t d) {
    require_dim(d, 2, "data dimension");
    auto grid = zero_grid(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            grid[j][k] = projector(d, mod(static_cast<long long>(k) - static_cast<long long>(j), d));
        }
    }
    return ProcessorDefinition::assemble(grid, "qudit_diagonal_" + std::to_string(d));
}

ProgramState diagonal_program(const std::vector<Complex> &entries) {
    const Ket k = Ket::from(entries);
    if (k.norm() == 0.0) {
        throw InvalidParameter("diagonal program needs a non-zero entry");
    }
    const Ket n = k.normalized();
    return {n, DiagonalEncoding{n.to_vector()}};
}

ProcessorDefinition amp_modifier_processor(std::size_t d, std::size_t n) {
    require_dim(d, 2, "data dimension");
    require_dim(n, 2, "program dimension");
    Operator x = Operator::identity(d);
    x(0, 0) = 0.0;
    auto grid = zero_grid(n, d);
    for (std::size_t j = 0; j < n; ++j) {
        grid[j][j] += x;
        grid[j][(j + 1) % n] += projector(d, 0);
    }
    return ProcessorDefinition::assemble(grid, "amp_modifier_" + std::to_string(d) + "_" + std::to_string(n));
}

Ket qid2_bell(int j) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (j) {
    case 0:
        return Ket{h, 0.0, 0.0, h};
    case 1:
        return Ket{0.0, h, h, 0.0};
    case 2:
        return Ket{0.0, h, -h, 0.0};
    case 3:
        return Ket{h, 0.0, 0.0, -h};
    default:
        throw IndexOutOfRange("Bell index " + std::to_string(j));
    }
}

ProcessorDefinition qid2() {
    Operator g(8, 8);
    for (int j = 0; j < 4; ++j) {
        const Ket b = qid2_bell(j);
        g += tensor(sigma(j), Operator::outer(b, b));
    }
    return ProcessorDefinition::from_unitary(std::move(g), 2, 4, "qid2");
}

ProgramState su2_program(const Vec3 &mu) {
    const double len = std::sqrt(mu[0] * mu[0] + mu[1] * mu[1] + mu[2] * mu[2]);
    const double sinc = len < 1e-8 ? 1.0 - len * len / 6.0 : std::sin(len) / len;
    Ket k = Complex{std::cos(len)} * qid2_bell(0);
    for (int j = 1; j <= 3; ++j) {
        k += Complex{0.0, sinc * mu[static_cast<std::size_t>(j - 1)]} * qid2_bell(j);
    }
    return {k, Su2Encoding{mu}};
}

ProgramBasis qid2_basis() {
    const double h = 1.0 / std::sqrt(2.0);
    const Ket plus{h, h};
    const Ket minus{h, -h};
    const Ket zero = Ket::basis(2, 0);
    const Ket one = Ket::basis(2, 1);
    return {{tensor(zero, plus), tensor(zero, minus), tensor(one, plus), tensor(one, minus)},
            {"0+", "0-", "1+", "1-"}};
}

Operator conditional_shift(std::size_t n, ShiftDirection dir) {
    require_dim(n, 2, "qudit dimension");
    const long long sign = dir == ShiftDirection::Forward ? 1 : -1;
    Operator d(n * n, n * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
            const std::size_t target = mod(static_cast<long long>(m) + sign * static_cast<long long>(k), n);
            d(k * n + target, k * n + m) = 1.0;
        }
    }
    return d;
}

Operator qid_network(std::size_t n) {
    const Operator fwd = conditional_shift(n, ShiftDirection::Forward);
    const Operator bwd = conditional_shift(n, ShiftDirection::Backward);
    // Qudit positions: 0 = data (1), 1 = program (2), 2 = program (3).
    const Operator d12 = embed_pair(fwd, n, 0, 1);
    const Operator d13 = embed_pair(fwd, n, 0, 2);
    const Operator d21_dag = embed_pair(bwd, n, 1, 0);
    const Operator d31 = embed_pair(fwd, n, 2, 0);
    return d31 * d21_dag * d13 * d12;
}

ProcessorDefinition qidN(std::size_t n) {
    return ProcessorDefinition::from_unitary(qid_network(n), n, n * n, "qid_" + std::to_string(n));
}

Ket bell_state(std::size_t m, std::size_t n, std::size_t dim) {
    require_dim(dim, 2, "qudit dimension");
    Ket k(dim * dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        const std::size_t second = mod(static_cast<long long>(j) - static_cast<long long>(n), dim);
        k[j * dim + second] = amp * root_of_unity(static_cast<long long>(m * j), dim);
    }
    return k;
}

Operator weyl(std::size_t m, std::size_t n, std::size_t dim) {
    require_dim(dim, 2, "qudit dimension");
    Operator u(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
        const std::size_t row = mod(static_cast<long long>(s) - static_cast<long long>(n), dim);
        u(row, s) = root_of_unity(-static_cast<long long>(s * m), dim);
    }
    return u;
}

Ket phi_state(std::size_t r, std::size_t s, std::size_t dim) {
    Ket k(dim * dim);
    const double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = 0; n < dim; ++n) {
            const long long phase = static_cast<long long>(m * r) - static_cast<long long>(n * s);
            k += (scale * root_of_unity(phase, dim)) * bell_state(m, n, dim);
        }
    }
    return k;
}

Ket phi_factorized(std::size_t r, std::size_t s, std::size_t dim) {
    const Ket first = Ket::basis(dim, mod(-static_cast<long long>(r), dim));
    Ket second(dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t n = 0; n < dim; ++n) {
        second[mod(static_cast<long long>(n) - static_cast<long long>(r), dim)] +=
            amp * root_of_unity(static_cast<long long>(n * s), dim);
    }
    return tensor(first, second);
}

ProgramBasis phi_basis(std::size_t dim) {
    std::vector<Ket> v;
    std::vector<std::string> l;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t s = 0; s < dim; ++s) {
            v.push_back(phi_state(r, s, dim));
            l.push_back(std::to_string(r) + "," + std::to_string(s));
        }
    }
    return {std::move(v), std::move(l)};
}

std::vector<Complex> weyl_expansion(const Operator &v) {
    if (!v.is_square()) {
        throw DimensionMismatch("Weyl expansion needs a square operator");
    }
    if (v.frobenius_norm() == 0.0) {
        throw ZeroOperator("cannot expand the zero operator");
    }
    const std::size_t dim = v.rows();
    std::vector<Complex> d(dim * dim);
    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = 0; n < dim; ++n) {
            d[m * dim + n] = hs_inner(weyl(m, n, dim), v) / static_cast<double>(dim);
        }
    }
    return d;
}

ProgramState program_for(const Operator &v) {
    if (!v.is_square()) {
        throw DimensionMismatch("program_for needs a square operator");
    }
    const double norm = v.frobenius_norm();
    if (norm == 0.0) {
        throw ZeroOperator("cannot encode the zero operator");
    }
    const std::size_t dim = v.rows();
    const double scale = norm / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> d = weyl_expansion(Complex{1.0 / scale} * v);
    Ket k(dim * dim);
    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = 0; n < dim; ++n) {
            k += d[m * dim + n] * bell_state(m, n, dim);
        }
    }
    return {k, WeylEncoding{dim, std::move(d), scale}};
}

BranchDecomposition qidN_branches(const Operator &v, const Ket &psi) {
    const std::size_t dim = v.rows();
    return decompose(qidN(dim), psi, program_for(v), phi_basis(dim));
}

} // namespace qproc::zoo
