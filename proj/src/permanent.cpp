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

#include "bosefid/permanent.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "bosefid/errors.hpp"

namespace bosefid {

Complex permanent_ryser(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("permanent requires a square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {1.0, 0.0};
  if (n > kMaxRyserOrder) {
    throw SizeLimitError("permanent order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxRyserOrder));
  }

  // per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij
  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{});
  Complex total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    gray ^= std::uint64_t{1} << col;
    const bool added = (gray >> col) & 1U;
    for (int i = 0; i < n; ++i) {
      if (added) {
        row_sums[static_cast<std::size_t>(i)] += a(i, col);
      } else {
        row_sums[static_cast<std::size_t>(i)] -= a(i, col);
      }
    }
    Complex prod = row_sums[0];
    for (int i = 1; i < n; ++i) prod *= row_sums[static_cast<std::size_t>(i)];
    if (std::popcount(gray) % 2 == 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  return (n % 2 == 1) ? -total : total;
}

Complex permanent_naive(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("permanent requires a square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return {1.0, 0.0};
  if (n > kMaxNaivePermanentOrder) {
    throw SizeLimitError("naive permanent limited to order " +
                         std::to_string(kMaxNaivePermanentOrder));
  }
  Complex total{};
  for (const Permutation& p : enumerate_permutations(n)) {
    Complex prod{1.0, 0.0};
    for (int i = 0; i < n; ++i) prod *= a(i, p(i));
    total += prod;
  }
  return total;
}

ComplexMatrix expanded_submatrix(const ComplexMatrix& u, const Configuration& rows,
                                 const Configuration& cols) {
  if (rows.total() != cols.total()) {
    throw DimensionError("row and column configurations carry different particle numbers");
  }
  if (rows.modes() != u.rows() || cols.modes() != u.cols()) {
    throw DimensionError("configuration length does not match the matrix shape");
  }
  const std::vector<int> r = rows.slot_modes();
  const std::vector<int> c = cols.slot_modes();
  const auto n = static_cast<Eigen::Index>(r.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = u(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace bosefid
