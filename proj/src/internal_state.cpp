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

#include "bosefid/internal_state.hpp"

#include <cmath>
#include <string>

#include "bosefid/errors.hpp"

namespace bosefid {
namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kStateTolerance = 1e-10;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool is_positive_semidefinite(const ComplexMatrix& h) {
  if (h.rows() <= 512) return min_hermitian_eigenvalue(h) >= -kStateTolerance;
  const ComplexMatrix shifted =
      h + kStateTolerance * ComplexMatrix::Identity(h.rows(), h.cols());
  Eigen::LLT<ComplexMatrix> llt(shifted);
  return llt.info() == Eigen::Success;
}

std::vector<std::size_t> inverse_map(const std::vector<std::size_t>& map) {
  std::vector<std::size_t> inv(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = i;
  return inv;
}

void check_input_matches(const MixedInternalState& rho, const Configuration& input) {
  if (input.total() != rho.particle_count()) {
    throw DimensionError("input configuration carries " + std::to_string(input.total()) +
                         " particles but the state has " +
                         std::to_string(rho.particle_count()));
  }
}

}  // namespace

DetectorModel::DetectorModel(std::vector<double> sensitivities) : gamma_(std::move(sensitivities)) {
  if (gamma_.empty()) throw ValidationError("detector model needs at least one sensitivity");
  for (double g : gamma_) {
    if (!(g >= 0.0 && g <= 1.0)) throw ValidationError("detector sensitivity outside [0, 1]");
  }
}

DetectorModel DetectorModel::ideal(int internal_dim) {
  return DetectorModel(std::vector<double>(static_cast<std::size_t>(internal_dim), 1.0));
}

bool DetectorModel::is_ideal() const {
  for (double g : gamma_) {
    if (g != 1.0) return false;
  }
  return true;
}

Complex DetectorModel::weighted_inner(const ComplexVector& a, const ComplexVector& b) const {
  if (a.size() != internal_dim() || b.size() != internal_dim()) {
    throw DimensionError("internal state dimension does not match the detector model");
  }
  Complex acc{};
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    acc += std::conj(a(j)) * gamma_[static_cast<std::size_t>(j)] * b(j);
  }
  return acc;
}

PureProductState::PureProductState(std::vector<ComplexVector> vectors)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw ValidationError("a product state needs at least one particle");
  const auto d = vectors_.front().size();
  if (d == 0) throw ValidationError("internal dimension must be positive");
  for (const ComplexVector& v : vectors_) {
    if (v.size() != d) throw DimensionError("internal state vectors have different dimensions");
    if (std::abs(v.norm() - 1.0) > kNormTolerance) {
      throw ValidationError("internal state vector is not normalized");
    }
  }
}

std::size_t tensor_dimension(int internal_dim, int particle_count) {
  std::size_t dim = 1;
  for (int a = 0; a < particle_count; ++a) {
    dim *= static_cast<std::size_t>(internal_dim);
    if (dim > kMaxTensorDimension) {
      throw SizeLimitError("internal tensor space d^N exceeds " +
                           std::to_string(kMaxTensorDimension));
    }
  }
  return dim;
}

MixedInternalState MixedInternalState::from_density(ComplexMatrix density, int particle_count,
                                                    int internal_dim) {
  if (particle_count < 1 || internal_dim < 1) {
    throw ValidationError("particle count and internal dimension must be positive");
  }
  const std::size_t dim = tensor_dimension(internal_dim, particle_count);
  if (density.rows() != static_cast<Eigen::Index>(dim) || density.cols() != density.rows()) {
    throw DimensionError("density matrix must be d^N x d^N = " + std::to_string(dim));
  }
  if (hermiticity_defect(density) > kStateTolerance) {
    throw ValidationError("density matrix is not Hermitian");
  }
  if (std::abs(density.trace() - Complex{1.0, 0.0}) > kStateTolerance) {
    throw ValidationError("density matrix does not have unit trace");
  }
  if (!is_positive_semidefinite(density)) {
    throw ValidationError("density matrix is not positive semidefinite");
  }
  return MixedInternalState(std::move(density), particle_count, internal_dim);
}

std::vector<std::size_t> tensor_permutation_map(const Permutation& sigma, int internal_dim) {
  const int n = sigma.size();
  const std::size_t dim = tensor_dimension(internal_dim, n);
  const auto d = static_cast<std::size_t>(internal_dim);
  // Place value of slot a: d^(n-1-a).
  std::vector<std::size_t> weight(static_cast<std::size_t>(n));
  std::size_t w = 1;
  for (int a = n - 1; a >= 0; --a) {
    weight[static_cast<std::size_t>(a)] = w;
    w *= d;
  }
  std::vector<std::size_t> map(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t target = 0;
    for (int a = 0; a < n; ++a) {
      const std::size_t digit = (i / weight[static_cast<std::size_t>(a)]) % d;
      target += digit * weight[static_cast<std::size_t>(sigma(a))];
    }
    map[i] = target;
  }
  return map;
}

ComplexMatrix gram_matrix(const PureProductState& states, const DetectorModel& detector) {
  const int n = states.particle_count();
  std::vector<double> scale(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    const double visible = detector.weighted_inner(states.vector(a), states.vector(a)).real();
    if (!(visible > 0.0)) {
      throw DegenerateDetectionError("particle " + std::to_string(a) +
                                     " is invisible to the detectors");
    }
    scale[static_cast<std::size_t>(a)] = 1.0 / std::sqrt(visible);
  }
  ComplexMatrix g(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g(a, b) = detector.weighted_inner(states.vector(a), states.vector(b)) *
                scale[static_cast<std::size_t>(a)] * scale[static_cast<std::size_t>(b)];
    }
    g(a, a) = 1.0;
  }
  return g;
}

MixedInternalState symmetrize_young(const MixedInternalState& rho, const Configuration& input) {
  check_input_matches(rho, input);
  const std::vector<Permutation> group = young_subgroup(input);
  if (group.size() == 1) return rho;

  const ComplexMatrix& src = rho.density();
  const auto dim = static_cast<Eigen::Index>(rho.dimension());
  const double inv_mu = 1.0 / static_cast<double>(group.size());

  std::vector<std::vector<std::size_t>> maps;
  maps.reserve(group.size());
  for (const Permutation& pi : group) maps.push_back(tensor_permutation_map(pi, rho.internal_dim()));

  // Y rho: average of row-permuted copies.
  ComplexMatrix left = ComplexMatrix::Zero(dim, dim);
  for (const auto& map : maps) {
    for (Eigen::Index a = 0; a < dim; ++a) left.row(static_cast<Eigen::Index>(map[a])) += src.row(a);
  }
  left *= inv_mu;
  // (Y rho) Y: average of column-permuted copies.
  ComplexMatrix both = ComplexMatrix::Zero(dim, dim);
  for (const auto& map : maps) {
    for (Eigen::Index b = 0; b < dim; ++b) both.col(static_cast<Eigen::Index>(map[b])) += left.col(b);
  }
  both *= inv_mu;

  const double weight = both.trace().real();
  if (!(weight > kStateTolerance)) {
    throw ValidationError("state has no component symmetric under the input's Young subgroup");
  }
  both /= weight;
  both = 0.5 * (both + both.adjoint()).eval();
  return MixedInternalState::from_density(std::move(both), rho.particle_count(),
                                          rho.internal_dim());
}

double young_asymmetry(const MixedInternalState& rho, const Configuration& input) {
  check_input_matches(rho, input);
  const ComplexMatrix& m = rho.density();
  const auto dim = static_cast<Eigen::Index>(rho.dimension());
  double worst = 0.0;
  for (const Permutation& pi : young_subgroup(input)) {
    if (pi.is_identity()) continue;
    const std::vector<std::size_t> inv = inverse_map(tensor_permutation_map(pi, rho.internal_dim()));
    for (Eigen::Index a = 0; a < dim; ++a) {
      const auto src = static_cast<Eigen::Index>(inv[static_cast<std::size_t>(a)]);
      worst = std::max(worst, (m.row(src) - m.row(a)).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

MixedInternalState product_density(const PureProductState& states) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(static_cast<std::size_t>(states.particle_count()));
  for (const ComplexVector& v : states.vectors()) factors.push_back(v * v.adjoint());
  return product_density(factors);
}

MixedInternalState product_density(std::span<const ComplexMatrix> particle_states) {
  if (particle_states.empty()) throw ValidationError("a product state needs at least one particle");
  const auto d = particle_states.front().rows();
  for (const ComplexMatrix& r : particle_states) {
    if (r.rows() != d || r.cols() != d) {
      throw DimensionError("per-particle density matrices must share one square shape");
    }
  }
  tensor_dimension(static_cast<int>(d), static_cast<int>(particle_states.size()));
  ComplexMatrix out = particle_states.front();
  for (std::size_t a = 1; a < particle_states.size(); ++a) out = kron(out, particle_states[a]);
  return MixedInternalState::from_density(std::move(out), static_cast<int>(particle_states.size()),
                                          static_cast<int>(d));
}

}  // namespace bosefid
