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
#include "qproc/processor.hpp"

#include <algorithm>
#include <string>

#include "qproc/error.hpp"

namespace qproc {

namespace {

Completeness completeness_of(const Eigen::MatrixXcd &g) {
    const auto n = g.rows();
    const auto id = Eigen::MatrixXcd::Identity(n, n);
    // Block (k1, k2) of G^dag G is sum_j A_{j k1}^dag A_{j k2}; block (k1, k2)
    // of G G^dag is sum_j A_{k1 j} A_{k2 j}^dag.
    return {(g.adjoint() * g - id).norm(), (g * g.adjoint() - id).norm()};
}

Eigen::MatrixXcd grid_to_matrix(const BlockGrid &blocks) {
    const std::size_t n = blocks.size();
    if (n == 0) {
        throw InvalidProcessor("empty block grid");
    }
    const std::size_t d = blocks.front().empty() ? 0 : blocks.front().front().rows();
    if (d == 0) {
        throw InvalidProcessor("blocks must be non-empty");
    }
    const auto ni = static_cast<Eigen::Index>(n);
    const auto di = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(di * ni, di * ni);
    for (std::size_t j = 0; j < n; ++j) {
        if (blocks[j].size() != n) {
            throw InvalidProcessor("block grid row " + std::to_string(j) + " has " +
                                   std::to_string(blocks[j].size()) + " entries, expected " + std::to_string(n));
        }
        for (std::size_t k = 0; k < n; ++k) {
            const Operator &a = blocks[j][k];
            if (a.rows() != d || a.cols() != d) {
                throw InvalidProcessor("block (" + std::to_string(j) + "," + std::to_string(k) +
                                       ") is not " + std::to_string(d) + "x" + std::to_string(d));
            }
            // G[(a, j), (b, k)] = A_jk[a, b]
            for (Eigen::Index ra = 0; ra < di; ++ra) {
                for (Eigen::Index cb = 0; cb < di; ++cb) {
                    g(ra * ni + static_cast<Eigen::Index>(j), cb * ni + static_cast<Eigen::Index>(k)) =
                        a.matrix()(ra, cb);
                }
            }
        }
    }
    return g;
}

} // namespace

Completeness completeness(const BlockGrid &blocks) { return completeness_of(grid_to_matrix(blocks)); }

ProcessorDefinition::ProcessorDefinition(Operator g, std::size_t d, std::size_t n, std::string label)
    : g_(std::move(g)), data_dim_(d), program_dim_(n), label_(std::move(label)) {}

ProcessorDefinition ProcessorDefinition::assemble(const BlockGrid &blocks, std::string label) {
    Eigen::MatrixXcd g = grid_to_matrix(blocks);
    const std::size_t n = blocks.size();
    const std::size_t d = blocks.front().front().rows();
    ProcessorDefinition p(Operator(std::move(g)), d, n, std::move(label));
    p.validate();
    return p;
}

ProcessorDefinition ProcessorDefinition::from_unitary(Operator g, std::size_t data_dim, std::size_t program_dim,
                                                      std::string label) {
    if (data_dim == 0 || program_dim == 0 || g.rows() != data_dim * program_dim || !g.is_square()) {
        throw InvalidProcessor("operator shape does not match data_dim * program_dim");
    }
    ProcessorDefinition p(std::move(g), data_dim, program_dim, std::move(label));
    p.validate();
    return p;
}

void ProcessorDefinition::validate() const {
    if (!g_.is_finite()) {
        throw InvalidProcessor("processor '" + label_ + "' has non-finite entries");
    }
    const Completeness c = completeness();
    if (c.column_residual > kTolProcessor || c.row_residual > kTolProcessor) {
        throw InvalidProcessor("processor '" + label_ + "' violates completeness (column residual " +
                               std::to_string(c.column_residual) + ", row residual " +
                               std::to_string(c.row_residual) + ")");
    }
}

Completeness ProcessorDefinition::completeness() const { return completeness_of(g_.matrix()); }

Operator ProcessorDefinition::block(std::size_t j, std::size_t k) const {
    if (j >= program_dim_ || k >= program_dim_) {
        throw IndexOutOfRange("block index out of range");
    }
    Operator a(data_dim_, data_dim_);
    for (std::size_t r = 0; r < data_dim_; ++r) {
        for (std::size_t c = 0; c < data_dim_; ++c) {
            a(r, c) = g_(r * program_dim_ + j, c * program_dim_ + k);
        }
    }
    return a;
}

std::string encoding_name(const ProgramEncoding &e) {
    struct Visitor {
        std::string operator()(const U1Encoding &) const { return "u1"; }
        std::string operator()(const Su2Encoding &) const { return "su2"; }
        std::string operator()(const DiagonalEncoding &) const { return "diagonal"; }
        std::string operator()(const GeometricEncoding &) const { return "geometric"; }
        std::string operator()(const WeylEncoding &) const { return "weyl"; }
        std::string operator()(const RawEncoding &) const { return "raw"; }
    };
    return std::visit(Visitor{}, e);
}

ProgramState::ProgramState(Ket ket, ProgramEncoding encoding) : ket_(std::move(ket)), encoding_(std::move(encoding)) {
    if (!ket_.is_finite() || !ket_.is_normalized()) {
        throw InvalidParameter("program state is not a normalized ket (norm^2 = " +
                               std::to_string(ket_.norm_squared()) + ")");
    }
    if (const auto *w = std::get_if<WeylEncoding>(&encoding_)) {
        double total = 0.0;
        for (const auto &d : w->coefficients) {
            total += std::norm(d);
        }
        if (std::abs(total - 1.0) > kTolNorm) {
            throw InvalidParameter("Weyl coefficients are not normalized");
        }
    }
}

ProgramBasis::ProgramBasis(std::vector<Ket> vectors, std::vector<std::string> labels)
    : vectors_(std::move(vectors)), labels_(std::move(labels)) {
    if (vectors_.empty() || vectors_.size() != labels_.size()) {
        throw InvalidParameter("program basis needs one label per vector");
    }
    const std::size_t n = vectors_.front().dim();
    if (vectors_.size() != n) {
        throw InvalidParameter("program basis must have as many vectors as the space dimension");
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (vectors_[a].dim() != n) {
            throw InvalidParameter("program basis vectors differ in dimension");
        }
        for (std::size_t b = a; b < n; ++b) {
            const Complex g = vectors_[a].inner(vectors_[b]);
            const Complex expect = a == b ? 1.0 : 0.0;
            if (std::abs(g - expect) > kTolNorm * 10) {
                throw InvalidParameter("program basis is not orthonormal");
            }
        }
    }
}

ProgramBasis ProgramBasis::computational(std::size_t dim) {
    std::vector<Ket> v;
    std::vector<std::string> l;
    for (std::size_t i = 0; i < dim; ++i) {
        v.push_back(Ket::basis(dim, i));
        l.push_back(std::to_string(i));
    }
    return {std::move(v), std::move(l)};
}

std::optional<std::size_t> ProgramBasis::index_of(const std::string &label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

double BranchDecomposition::total_probability() const {
    double s = 0.0;
    for (const auto &b : branches) {
        s += b.probability;
    }
    return s;
}

const Branch &BranchDecomposition::at(const std::string &label) const {
    for (const auto &b : branches) {
        if (b.label == label) {
            return b;
        }
    }
    throw IndexOutOfRange("no branch labelled '" + label + "'");
}

Operator program_operator(const ProcessorDefinition &proc, const ProgramState &xi, std::size_t j) {
    const std::size_t n = proc.program_dim();
    if (j >= n) {
        throw IndexOutOfRange("program outcome " + std::to_string(j) + " out of range");
    }
    if (xi.dim() != n) {
        throw DimensionMismatch("program state dim " + std::to_string(xi.dim()) + " != " + std::to_string(n));
    }
    Operator a(proc.data_dim(), proc.data_dim());
    for (std::size_t k = 0; k < n; ++k) {
        a += xi.ket()[k] * proc.block(j, k);
    }
    return a;
}

std::vector<Operator> branch_operators(const ProcessorDefinition &proc, const ProgramState &xi,
                                       const ProgramBasis &basis) {
    const auto n = static_cast<Eigen::Index>(proc.program_dim());
    const auto d = static_cast<Eigen::Index>(proc.data_dim());
    if (xi.dim() != proc.program_dim() || basis.dim() != proc.program_dim()) {
        throw DimensionMismatch("program state or basis does not match program dim " + std::to_string(n));
    }
    // Columns of (I (x) |Xi>) pushed through G.
    Eigen::MatrixXcd lift = Eigen::MatrixXcd::Zero(d * n, d);
    for (Eigen::Index b = 0; b < d; ++b) {
        lift.block(b * n, b, n, 1) = xi.ket().vector();
    }
    const Eigen::MatrixXcd m = proc.unitary().matrix() * lift;

    Eigen::MatrixXcd bvecs(n, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t p = 0; p < basis.size(); ++p) {
        bvecs.col(static_cast<Eigen::Index>(p)) = basis.vectors()[p].vector();
    }
    std::vector<Eigen::MatrixXcd> ops(basis.size(), Eigen::MatrixXcd::Zero(d, d));
    for (Eigen::Index col = 0; col < d; ++col) {
        // Row (a * n + j) of m reshaped so that r(j, a) = m(a * n + j, col).
        const Eigen::Map<const Eigen::MatrixXcd> r(m.col(col).data(), n, d);
        const Eigen::MatrixXcd c = bvecs.adjoint() * r; // c(p, a) = A_p(a, col)
        for (std::size_t p = 0; p < basis.size(); ++p) {
            ops[p].col(col) = c.row(static_cast<Eigen::Index>(p)).transpose();
        }
    }
    std::vector<Operator> out;
    out.reserve(ops.size());
    for (auto &o : ops) {
        out.emplace_back(std::move(o));
    }
    return out;
}

BranchDecomposition decompose(const ProcessorDefinition &proc, const Ket &psi, const ProgramState &xi,
                              const ProgramBasis &basis) {
    if (psi.dim() != proc.data_dim()) {
        throw DimensionMismatch("data state dim " + std::to_string(psi.dim()) + " != " +
                                std::to_string(proc.data_dim()));
    }
    auto ops = branch_operators(proc, xi, basis);
    BranchDecomposition dec;
    dec.branches.reserve(ops.size());
    for (std::size_t p = 0; p < ops.size(); ++p) {
        Branch b;
        b.label = basis.labels()[p];
        Ket out = apply(ops[p], psi);
        b.probability = out.norm_squared();
        if (b.probability >= kBranchCutoff) {
            b.post_state = out.normalized();
        }
        b.op = std::move(ops[p]);
        dec.branches.push_back(std::move(b));
    }
    return dec;
}

std::size_t sample_branch(const BranchDecomposition &dec, RngStream &rng) {
    double total = 0.0;
    std::size_t last = dec.branches.size();
    for (std::size_t i = 0; i < dec.branches.size(); ++i) {
        if (dec.branches[i].probability >= kBranchCutoff) {
            total += dec.branches[i].probability;
            last = i;
        }
    }
    if (last == dec.branches.size()) {
        throw InvalidParameter("no branch has non-negligible probability");
    }
    const double u = rng.uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < dec.branches.size(); ++i) {
        if (dec.branches[i].probability < kBranchCutoff) {
            continue;
        }
        acc += dec.branches[i].probability;
        if (u < acc) {
            return i;
        }
    }
    return last;
}

SampleOutcome sample(const ProcessorDefinition &proc, const Ket &psi, const ProgramState &xi,
                     const ProgramBasis &basis, RngStream &rng) {
    const BranchDecomposition dec = decompose(proc, psi, xi, basis);
    const std::size_t i = sample_branch(dec, rng);
    const Branch &b = dec.branches[i];
    return {i, b.label, b.probability, *b.post_state};
}

} // namespace qproc
