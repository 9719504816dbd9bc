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
 * Dense complex kets and operators.
 *
 * Composite spaces use one index convention everywhere: for a product
 * a (x) b the joint index of (i_a, i_b) is i_a * dim_b + i_b. Processors
 * always put the data register first and the program register second.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace qproc {

using Complex = std::complex<double>;

inline constexpr double kTolNorm = 1e-10;
/// Relative singular-value floor used by inverse().
inline constexpr double kTolSingularRel = 1e-9;

class Ket {
  public:
    Ket() = default;
    explicit Ket(std::size_t dim);
    explicit Ket(Eigen::VectorXcd amps);
    Ket(std::initializer_list<Complex> amps);

    static Ket basis(std::size_t dim, std::size_t index);
    static Ket from(const std::vector<Complex> &amps);

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
    [[nodiscard]] Complex &operator[](std::size_t i) { return amps_(static_cast<Eigen::Index>(i)); }

    [[nodiscard]] const Eigen::VectorXcd &vector() const { return amps_; }
    [[nodiscard]] std::vector<Complex> to_vector() const;

    [[nodiscard]] double norm() const { return amps_.norm(); }
    [[nodiscard]] double norm_squared() const { return amps_.squaredNorm(); }
    [[nodiscard]] bool is_normalized(double tol = kTolNorm) const;
    [[nodiscard]] bool is_finite() const { return amps_.allFinite(); }
    /// Returns this ket scaled to unit norm. Throws ZeroOperator on a zero ket.
    [[nodiscard]] Ket normalized() const;

    /// <this|other>
    [[nodiscard]] Complex inner(const Ket &other) const;

    Ket &operator+=(const Ket &other);
    Ket &operator-=(const Ket &other);
    Ket &operator*=(Complex s);

  private:
    Eigen::VectorXcd amps_;
};

Ket operator+(Ket a, const Ket &b);
Ket operator-(Ket a, const Ket &b);
Ket operator*(Complex s, Ket a);

class Operator {
  public:
    Operator() = default;
    Operator(std::size_t rows, std::size_t cols);
    explicit Operator(Eigen::MatrixXcd entries);

    static Operator identity(std::size_t dim);
    static Operator zero(std::size_t rows, std::size_t cols) { return Operator(rows, cols); }
    static Operator diagonal(const std::vector<Complex> &entries);
    /// Row-major nested initializer, e.g. from_rows({{0, 1}, {1, 0}}).
    static Operator from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    /// |ket><bra|
    static Operator outer(const Ket &ket, const Ket &bra);

    [[nodiscard]] std::size_t rows() const { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] std::size_t cols() const { return static_cast<std::size_t>(m_.cols()); }
    [[nodiscard]] bool is_square() const { return m_.rows() == m_.cols(); }
    [[nodiscard]] bool is_finite() const { return m_.allFinite(); }

    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    [[nodiscard]] Complex &operator()(std::size_t r, std::size_t c) {
        return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

    [[nodiscard]] const Eigen::MatrixXcd &matrix() const { return m_; }
    [[nodiscard]] double frobenius_norm() const { return m_.norm(); }
    [[nodiscard]] Complex trace() const;

    Operator &operator+=(const Operator &other);
    Operator &operator-=(const Operator &other);
    Operator &operator*=(Complex s);

  private:
    Eigen::MatrixXcd m_;
};

Operator operator+(Operator a, const Operator &b);
Operator operator-(Operator a, const Operator &b);
Operator operator*(Complex s, Operator a);
/// Matrix product; throws DimensionMismatch.
Operator operator*(const Operator &a, const Operator &b);

/// Kronecker product a (x) b.
Operator tensor(const Operator &a, const Operator &b);
Ket tensor(const Ket &a, const Ket &b);

Operator dagger(const Operator &m);

/// Matrix-vector product; throws DimensionMismatch when m.cols() != v.dim().
Ket apply(const Operator &m, const Ket &v);

/// true iff ||m^dagger m - I||_F <= tol. Non-square input is never unitary.
bool is_unitary(const Operator &m, double tol = kTolNorm);

/// Throws SingularOperator when sigma_min <= kTolSingularRel * sigma_max.
Operator inverse(const Operator &m);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const Operator &a, const Operator &b);

/// If b = lambda * a (within tol relative to ||b||_F) returns lambda.
/// A zero b is never reported proportional.
std::optional<Complex> proportionality(const Operator &a, const Operator &b, double tol = 1e-9);

/// min over global phases of ||a - e^{i phi} b||.
double distance_up_to_phase(const Ket &a, const Ket &b);
double distance_up_to_phase(const Operator &a, const Operator &b);

// Pauli matrices; sigma(0) is the identity, 1..3 are x, y, z.
Operator sigma(int j);
inline Operator sigma_x() { return sigma(1); }
inline Operator sigma_y() { return sigma(2); }
inline Operator sigma_z() { return sigma(3); }

using Vec3 = std::array<double, 3>;

/// exp(i mu.sigma) = cos|mu| I + i sin|mu| (mu/|mu|).sigma
Operator su2_exp(const Vec3 &mu);

struct Su2Log {
    Vec3 mu{};
    double phase = 0.0;
};

/**
 * Inverse of su2_exp up to a global phase: e^{i phase} su2_exp(mu) == u.
 *
 * |mu| lies in [0, pi] and phase in [-pi/2, pi/2). When det(u) = -1 both
 * +pi/2 and -pi/2 are admissible; the lower one is returned. Throws
 * NotUnitary when u is not a 2x2 unitary within tol.
 */
Su2Log su2_log(const Operator &u, double tol = 1e-9);

} // namespace qproc
