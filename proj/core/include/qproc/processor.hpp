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
 * Programmable processors in block form and their measurement branches.
 *
 * A processor is a unitary G on data (x) program written as
 * G = sum_{jk} A_jk (x) |j><k|. Running it on |psi> (x) |Xi> and measuring
 * the program register in an orthonormal basis {|b>} leaves the data in
 * A_b(Xi)|psi>, where A_b(Xi) = (I (x) <b|) G (I (x) |Xi>).
 */
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qproc/linalg.hpp"
#include "qproc/rng.hpp"

namespace qproc {

/// Tolerance on the two completeness sums checked by ProcessorDefinition.
inline constexpr double kTolProcessor = 1e-9;
/// Branches below this probability carry no post-state and are never sampled.
inline constexpr double kBranchCutoff = 1e-12;

/// Residuals of the two completeness relations, as Frobenius norms.
struct Completeness {
    double column_residual = 0.0; ///< || sum_j A_{j k1}^dag A_{j k2} - delta I ||
    double row_residual = 0.0;    ///< || sum_j A_{k1 j} A_{k2 j}^dag - delta I ||
};

using BlockGrid = std::vector<std::vector<Operator>>;

class ProcessorDefinition {
  public:
    /// Builds G from an N x N grid of D x D blocks. Throws InvalidProcessor
    /// when the grid is malformed or a completeness sum fails.
    static ProcessorDefinition assemble(const BlockGrid &blocks, std::string label = {});
    /// Wraps an already materialized G on data (x) program.
    static ProcessorDefinition from_unitary(Operator g, std::size_t data_dim, std::size_t program_dim,
                                            std::string label = {});

    [[nodiscard]] std::size_t data_dim() const { return data_dim_; }
    [[nodiscard]] std::size_t program_dim() const { return program_dim_; }
    [[nodiscard]] const std::string &label() const { return label_; }

    /// The (D N) x (D N) matrix sum_jk A_jk (x) |j><k|.
    [[nodiscard]] const Operator &unitary() const { return g_; }
    /// A_jk. Throws IndexOutOfRange.
    [[nodiscard]] Operator block(std::size_t j, std::size_t k) const;
    [[nodiscard]] Completeness completeness() const;

  private:
    ProcessorDefinition(Operator g, std::size_t d, std::size_t n, std::string label);
    void validate() const;

    Operator g_;
    std::size_t data_dim_ = 0;
    std::size_t program_dim_ = 0;
    std::string label_;
};

/// Checks both completeness relations of a grid without building a processor.
Completeness completeness(const BlockGrid &blocks);

// Metadata describing what a program state encodes.
struct U1Encoding {
    double alpha = 0.0;
};
struct Su2Encoding {
    Vec3 mu{};
};
struct DiagonalEncoding {
    std::vector<Complex> entries;
};
struct GeometricEncoding {
    Complex z{1.0};
    std::size_t n = 2;
};
struct WeylEncoding {
    std::size_t n = 2;
    std::vector<Complex> coefficients; ///< d_mn at index m * n + n'
    double scale = 1.0;                ///< V = scale * sum d_mn U^(m,n)
};
struct RawEncoding {};

using ProgramEncoding =
    std::variant<U1Encoding, Su2Encoding, DiagonalEncoding, GeometricEncoding, WeylEncoding, RawEncoding>;

std::string encoding_name(const ProgramEncoding &e);

class ProgramState {
  public:
    /// Throws InvalidParameter unless ket is normalized (and, for Weyl
    /// encodings, sum |d_mn|^2 = 1).
    ProgramState(Ket ket, ProgramEncoding encoding = RawEncoding{});

    [[nodiscard]] const Ket &ket() const { return ket_; }
    [[nodiscard]] const ProgramEncoding &encoding() const { return encoding_; }
    [[nodiscard]] std::size_t dim() const { return ket_.dim(); }

  private:
    Ket ket_;
    ProgramEncoding encoding_;
};

class ProgramBasis {
  public:
    /// Throws InvalidParameter if the vectors are not orthonormal or the
    /// label count differs.
    ProgramBasis(std::vector<Ket> vectors, std::vector<std::string> labels);

    /// {|0>, ..., |N-1>} labelled "0" .. "N-1".
    static ProgramBasis computational(std::size_t dim);

    [[nodiscard]] std::size_t size() const { return vectors_.size(); }
    [[nodiscard]] std::size_t dim() const { return vectors_.empty() ? 0 : vectors_.front().dim(); }
    [[nodiscard]] const std::vector<Ket> &vectors() const { return vectors_; }
    [[nodiscard]] const std::vector<std::string> &labels() const { return labels_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string &label) const;

  private:
    std::vector<Ket> vectors_;
    std::vector<std::string> labels_;
};

struct Branch {
    std::string label;
    Operator op;               ///< A_b(Xi), independent of the data state
    double probability = 0.0;  ///< ||A_b psi||^2
    std::optional<Ket> post_state;
};

struct BranchDecomposition {
    std::vector<Branch> branches;

    [[nodiscard]] double total_probability() const;
    [[nodiscard]] const Branch &at(const std::string &label) const;
};

/// A_j(Xi) = sum_k <k|Xi> A_jk for the computational program basis.
Operator program_operator(const ProcessorDefinition &proc, const ProgramState &xi, std::size_t j);

/// A_b(Xi) for every vector of `basis`, in basis order.
std::vector<Operator> branch_operators(const ProcessorDefinition &proc, const ProgramState &xi,
                                       const ProgramBasis &basis);

BranchDecomposition decompose(const ProcessorDefinition &proc, const Ket &psi, const ProgramState &xi,
                              const ProgramBasis &basis);

struct SampleOutcome {
    std::size_t index = 0;
    std::string label;
    double probability = 0.0;
    Ket post_state;
};

/// Inverse-CDF draw over the branches in order. Only branches at or above
/// kBranchCutoff take part.
std::size_t sample_branch(const BranchDecomposition &dec, RngStream &rng);

SampleOutcome sample(const ProcessorDefinition &proc, const Ket &psi, const ProgramState &xi,
                     const ProgramBasis &basis, RngStream &rng);

} // namespace qproc
