// Copyright 2026 The bosefid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSEFID_ERRORS_HPP
#define BOSEFID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bosefid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: shapes, norms, non-unitary networks.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Mismatched sizes between operands (matrix shapes, configuration totals).
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A state or J-matrix whose detection probability vanishes.
class DegenerateDetectionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The bunched-output estimator has a vanishing classical denominator.
class UnestimableError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A request exceeds one of the enumeration or memory caps.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// A proven identity or inequality failed beyond tolerance. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bosefid

#endif  // BOSEFID_ERRORS_HPP
