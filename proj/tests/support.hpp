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

#ifndef BOSEFID_TESTS_SUPPORT_HPP
#define BOSEFID_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "bosefid/combinatorics.hpp"
#include "bosefid/conjecture_probe.hpp"
#include "bosefid/internal_state.hpp"
#include "bosefid/linalg.hpp"

namespace bosefid::testing {

inline ComplexMatrix beamsplitter() {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(2, 2);
  u << h, h, h, -h;
  return u;
}

inline ComplexVector basis_vector(int d, int k) { return ComplexVector::Unit(d, k); }

/// cos(t)|0> + sin(t)|1>: overlap cos(t) with |0>.
inline ComplexVector with_overlap(int d, double c) {
  ComplexVector v = ComplexVector::Zero(d);
  v(0) = c;
  v(1) = std::sqrt(1.0 - c * c);
  return v;
}

inline ComplexVector random_vector(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(g(rng), g(rng));
  return v.normalized();
}

inline PureProductState random_pure(int n, int d, std::mt19937_64& rng) {
  std::vector<ComplexVector> vs;
  for (int a = 0; a < n; ++a) vs.push_back(random_vector(d, rng));
  return PureProductState(std::move(vs));
}

inline ComplexMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a(r, c) = Complex(g(rng), g(rng));
  }
  return a;
}

/// Random full-rank (or rank-`rank`) density matrix on dimension `dim`.
inline ComplexMatrix random_density(int dim, int rank, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(dim, rank, rng);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return (rho + rho.adjoint()) / 2.0;
}

inline DetectorModel random_detector(int d, std::mt19937_64& rng, double low = 0.5) {
  std::uniform_real_distribution<double> u(low, 1.0);
  std::vector<double> g(static_cast<std::size_t>(d));
  for (double& x : g) x = u(rng);
  return DetectorModel(g);
}

/// N particles placed in M modes uniformly at random.
inline Configuration random_input(int modes, int particles, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, modes - 1);
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  for (int a = 0; a < particles; ++a) ++occ[static_cast<std::size_t>(pick(rng))];
  return Configuration(occ);
}

/// Dense matrix of the slot permutation that sends the content of slot a to
/// slot sigma(a), built digit by digit.
inline ComplexMatrix slot_permutation_matrix(const Permutation& sigma, int d) {
  const int n = sigma.size();
  std::size_t dim = 1;
  for (int a = 0; a < n; ++a) dim *= static_cast<std::size_t>(d);
  ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<int> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t rest = i;
    for (int a = n - 1; a >= 0; --a) {
      in[static_cast<std::size_t>(a)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    for (int a = 0; a < n; ++a) out[static_cast<std::size_t>(sigma(a))] = in[static_cast<std::size_t>(a)];
    std::size_t j = 0;
    for (int a = 0; a < n; ++a) j = j * static_cast<std::size_t>(d) + static_cast<std::size_t>(out[static_cast<std::size_t>(a)]);
    p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return p;
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline ComplexMatrix detector_tensor(const DetectorModel& det, int n) {
  ComplexMatrix g = ComplexMatrix::Zero(det.internal_dim(), det.internal_dim());
  for (int j = 0; j < det.internal_dim(); ++j) g(j, j) = det.sensitivity(j);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int a = 0; a < n; ++a) out = kron(out, g);
  return out;
}

/// Permanent by Laplace expansion along the first row.
inline Complex permanent_laplace(const ComplexMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1.0;
  if (n == 1) return a(0, 0);
  Complex total = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    ComplexMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = a(r, k);
      }
    }
    total += a(0, c) * permanent_laplace(minor);
  }
  return total;
}

}  // namespace bosefid::testing

#endif  // BOSEFID_TESTS_SUPPORT_HPP
