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
#include "qproc/random.hpp"

#include <cmath>

namespace qproc {

Operator ginibre(std::size_t rows, std::size_t cols, RngStream &rng) {
    Operator g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex{re, im} / std::sqrt(2.0);
        }
    }
    return g;
}

Ket haar_ket(std::size_t dim, RngStream &rng) {
    Ket k(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        k[i] = Complex{re, im};
    }
    return k.normalized();
}

Operator haar_unitary(std::size_t dim, RngStream &rng) {
    const Eigen::MatrixXcd z = ginibre(dim, dim, rng).matrix();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) {
            q.col(j) *= d / std::abs(d);
        }
    }
    return Operator(std::move(q));
}

} // namespace qproc
