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
 * Exception types thrown by the qproc core.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace qproc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

/// Smallest singular value below the relative threshold.
class SingularOperator : public Error {
  public:
    using Error::Error;
};

class NotUnitary : public Error {
  public:
    using Error::Error;
};

/// The block grid fails one of the two completeness sums.
class InvalidProcessor : public Error {
  public:
    using Error::Error;
};

class InvalidParameter : public Error {
  public:
    using Error::Error;
};

class ZeroOperator : public Error {
  public:
    using Error::Error;
};

/// A diagonal correction hit a zero entry of the applied operator.
class SingularProgram : public Error {
  public:
    using Error::Error;
};

} // namespace qproc
