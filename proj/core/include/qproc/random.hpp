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
 * Haar-distributed random kets and unitaries.
 */
#pragma once

#include <cstddef>

#include "qproc/linalg.hpp"
#include "qproc/rng.hpp"

namespace qproc {

Ket haar_ket(std::size_t dim, RngStream &rng);

/// QR of a complex Ginibre matrix with the R-diagonal phases divided out.
Operator haar_unitary(std::size_t dim, RngStream &rng);

/// Matrix with i.i.d. complex normal entries; not normalized.
Operator ginibre(std::size_t rows, std::size_t cols, RngStream &rng);

} // namespace qproc
