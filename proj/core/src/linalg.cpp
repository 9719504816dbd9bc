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
#include "qproc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qproc/error.hpp"

namespace qproc {

namespace {

std::string shape(const Eigen::MatrixXcd &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

// Ket

Ket::Ket(std::size_t dim) : amps_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim))) {}

Ket::Ket(Eigen::VectorXcd amps) : amps_(std::move(amps)) {}

Ket::Ket(std::initializer_list<Complex> amps) : amps_(static_cast<Eigen::Index>(amps.size())) {
    Eigen::Index i = 0;
    for (const auto &a : amps) {
        amps_(i++) = a;
    }
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw IndexOutOfRange("basis index " + std::to_string(index) + " out of range for dim " +
                              std::to_string(dim));
    }
    Ket k(dim);
    k[index] = 1.0;
    return k;
}

Ket Ket::from(const std::vector<Complex> &amps) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = amps[i];
    }
    return Ket(std::move(v));
}

std::vector<Complex> Ket::to_vector() const { return {amps_.data(), amps_.data() + amps_.size()}; }

bool Ket::is_normalized(double tol) const { return std::abs(amps_.squaredNorm() - 1.0) <= tol; }

Ket Ket::normalized() const {
    const double n = amps_.norm();
    if (n == 0.0) {
        throw ZeroOperator("cannot normalize a zero ket");
    }
    return Ket(amps_ / n);
}

Complex Ket::inner(const Ket &other) const {
    if (dim() != other.dim()) {
        throw DimensionMismatch("inner product of kets with dims " + std::to_string(dim()) + " and " +
                                std::to_string(other.dim()));
    }
    return amps_.dot(other.amps_); // Eigen conjugates the left operand
}

Ket &Ket::operator+=(const Ket &other) {
    if (dim() != other.dim()) {
        throw DimensionMismatch("ket sum dimension mismatch");
    }
    amps_ += other.amps_;
    return *this;
}

Ket &Ket::operator-=(const Ket &other) {
    if (dim() != other.dim()) {
        throw DimensionMismatch("ket difference dimension mismatch");
    }
    amps_ -= other.amps_;
    return *this;
}

Ket &Ket::operator*=(Complex s) {
    amps_ *= s;
    return *this;
}

Ket operator+(Ket a, const Ket &b) { return a += b; }
Ket operator-(Ket a, const Ket &b) { return a -= b; }
Ket operator*(Complex s, Ket a) { return a *= s; }

// Operator

Operator::Operator(std::size_t rows, std::size_t cols)
    : m_(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols))) {}

Operator::Operator(Eigen::MatrixXcd entries) : m_(std::move(entries)) {}

Operator Operator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(Eigen::MatrixXcd::Identity(n, n));
}

Operator Operator::diagonal(const std::vector<Complex> &entries) {
    Operator d(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        d(i, i) = entries[i];
    }
    return d;
}

Operator Operator::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Operator m(r, c);
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != c) {
            throw DimensionMismatch("ragged row list");
        }
        std::size_t j = 0;
        for (const auto &x : row) {
            m(i, j++) = x;
        }
        ++i;
    }
    return m;
}

Operator Operator::outer(const Ket &ket, const Ket &bra) {
    return Operator(ket.vector() * bra.vector().adjoint());
}

Complex Operator::trace() const {
    if (!is_square()) {
        throw DimensionMismatch("trace of non-square " + shape(m_));
    }
    return m_.trace();
}

Operator &Operator::operator+=(const Operator &other) {
    if (m_.rows() != other.m_.rows() || m_.cols() != other.m_.cols()) {
        throw DimensionMismatch("operator sum " + shape(m_) + " + " + shape(other.m_));
    }
    m_ += other.m_;
    return *this;
}

Operator &Operator::operator-=(const Operator &other) {
    if (m_.rows() != other.m_.rows() || m_.cols() != other.m_.cols()) {
        throw DimensionMismatch("operator difference " + shape(m_) + " - " + shape(other.m_));
    }
    m_ -= other.m_;
    return *this;
}

Operator &Operator::operator*=(Complex s) {
    m_ *= s;
    return *this;
}

Operator operator+(Operator a, const Operator &b) { return a += b; }
Operator operator-(Operator a, const Operator &b) { return a -= b; }
Operator operator*(Complex s, Operator a) { return a *= s; }

Operator operator*(const Operator &a, const Operator &b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("operator product " + shape(a.matrix()) + " * " + shape(b.matrix()));
    }
    return Operator(a.matrix() * b.matrix());
}

Operator tensor(const Operator &a, const Operator &b) {
    const auto &ma = a.matrix();
    const auto &mb = b.matrix();
    Eigen::MatrixXcd out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
    for (Eigen::Index i = 0; i < ma.rows(); ++i) {
        for (Eigen::Index j = 0; j < ma.cols(); ++j) {
            out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) = ma(i, j) * mb;
        }
    }
    return Operator(std::move(out));
}

Ket tensor(const Ket &a, const Ket &b) {
    const auto &va = a.vector();
    const auto &vb = b.vector();
    Eigen::VectorXcd out(va.size() * vb.size());
    for (Eigen::Index i = 0; i < va.size(); ++i) {
        out.segment(i * vb.size(), vb.size()) = va(i) * vb;
    }
    return Ket(std::move(out));
}

Operator dagger(const Operator &m) { return Operator(m.matrix().adjoint()); }

Ket apply(const Operator &m, const Ket &v) {
    if (m.cols() != v.dim()) {
        throw DimensionMismatch("apply: operator " + shape(m.matrix()) + " on ket of dim " +
                                std::to_string(v.dim()));
    }
    return Ket(Eigen::VectorXcd(m.matrix() * v.vector()));
}

bool is_unitary(const Operator &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    const auto n = m.matrix().rows();
    return (m.matrix().adjoint() * m.matrix() - Eigen::MatrixXcd::Identity(n, n)).norm() <= tol;
}

Operator inverse(const Operator &m) {
    if (!m.is_square()) {
        throw DimensionMismatch("inverse of non-square " + shape(m.matrix()));
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.matrix());
    const auto &sv = svd.singularValues();
    const double largest = sv.size() == 0 ? 0.0 : sv(0);
    const double smallest = sv.size() == 0 ? 0.0 : sv(sv.size() - 1);
    if (!(largest > 0.0) || smallest <= kTolSingularRel * largest) {
        throw SingularOperator("operator is singular: sigma_min=" + std::to_string(smallest) +
                               ", sigma_max=" + std::to_string(largest));
    }
    return Operator(m.matrix().partialPivLu().inverse());
}

Complex hs_inner(const Operator &a, const Operator &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("Hilbert-Schmidt product " + shape(a.matrix()) + " vs " + shape(b.matrix()));
    }
    return (a.matrix().adjoint() * b.matrix()).trace();
}

std::optional<Complex> proportionality(const Operator &a, const Operator &b, double tol) {
    const double nb = b.frobenius_norm();
    const double na2 = a.matrix().squaredNorm();
    if (nb == 0.0 || na2 == 0.0) {
        return std::nullopt;
    }
    const Complex lambda = hs_inner(a, b) / na2;
    if ((b.matrix() - lambda * a.matrix()).norm() > tol * nb) {
        return std::nullopt;
    }
    return lambda;
}

double distance_up_to_phase(const Ket &a, const Ket &b) {
    const Complex ov = b.inner(a);
    const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex{1.0};
    return (a.vector() - phase * b.vector()).norm();
}

double distance_up_to_phase(const Operator &a, const Operator &b) {
    const Complex ov = hs_inner(b, a);
    const Complex phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex{1.0};
    return (a.matrix() - phase * b.matrix()).norm();
}

Operator sigma(int j) {
    constexpr Complex i{0.0, 1.0};
    switch (j) {
    case 0:
        return Operator::identity(2);
    case 1:
        return Operator::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case 2:
        return Operator::from_rows({{0.0, -i}, {i, 0.0}});
    case 3:
        return Operator::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    default:
        throw IndexOutOfRange("Pauli index " + std::to_string(j));
    }
}

Operator su2_exp(const Vec3 &mu) {
    const double len = std::sqrt(mu[0] * mu[0] + mu[1] * mu[1] + mu[2] * mu[2]);
    // sin(x)/x, with the removable singularity at 0
    const double sinc = len < 1e-8 ? 1.0 - len * len / 6.0 : std::sin(len) / len;
    const Complex is{0.0, sinc};
    Operator u = Complex{std::cos(len)} * Operator::identity(2);
    for (int k = 0; k < 3; ++k) {
        u += (is * mu[static_cast<std::size_t>(k)]) * sigma(k + 1);
    }
    return u;
}

Su2Log su2_log(const Operator &u, double tol) {
    if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, tol)) {
        throw NotUnitary("su2_log expects a 2x2 unitary");
    }
    constexpr double pi = std::numbers::pi;
    const auto &m = u.matrix();
    const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double phase = std::arg(det) / 2.0;
    if (phase >= pi / 2.0 - 1e-12) {
        phase -= pi;
    }
    const Eigen::Matrix2cd v = std::polar(1.0, -phase) * m;

    // v = cos|mu| I + i sin|mu| n.sigma
    const double c = 0.5 * (v(0, 0) + v(1, 1)).real();
    const Vec3 s{0.5 * (v(0, 1) + v(1, 0)).imag(), 0.5 * (v(0, 1) - v(1, 0)).real(),
                 0.5 * (v(0, 0) - v(1, 1)).imag()};
    const double snorm = std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]);
    const double len = std::atan2(snorm, c);

    Su2Log out;
    out.phase = phase;
    if (snorm > 1e-14) {
        for (std::size_t k = 0; k < 3; ++k) {
            out.mu[k] = len * s[k] / snorm;
        }
    } else if (c < 0.0) {
        // v = -I: any axis works at |mu| = pi
        out.mu = {0.0, 0.0, pi};
    }
    return out;
}

} // namespace qproc
