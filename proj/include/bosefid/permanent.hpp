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

#ifndef BOSEFID_PERMANENT_HPP
#define BOSEFID_PERMANENT_HPP

#include "bosefid/combinatorics.hpp"
#include "bosefid/linalg.hpp"

namespace bosefid {

inline constexpr int kMaxRyserOrder = 20;
inline constexpr int kMaxNaivePermanentOrder = 8;

/// Permanent by Ryser's inclusion-exclusion formula, visiting column subsets
/// in Gray-code order so each step updates the row sums by one column.
/// O(2^n n). The permanent of the 0x0 matrix is 1.
Complex permanent_ryser(const ComplexMatrix& a);

/// Permanent as the sum over all n! permutations. Reference implementation
/// for testing; n <= 8.
Complex permanent_naive(const ComplexMatrix& a);

/// N x N matrix with row k of `u` repeated rows[k] times and column l
/// repeated cols[l] times, both in nondecreasing mode order.
ComplexMatrix expanded_submatrix(const ComplexMatrix& u, const Configuration& rows,
                                 const Configuration& cols);

}  // namespace bosefid

#endif  // BOSEFID_PERMANENT_HPP
