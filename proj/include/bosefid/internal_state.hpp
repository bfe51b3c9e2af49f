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

#ifndef BOSEFID_INTERNAL_STATE_HPP
#define BOSEFID_INTERNAL_STATE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "bosefid/combinatorics.hpp"
#include "bosefid/linalg.hpp"

namespace bosefid {

/// Cap on d^N for any dense operator on the N-fold internal space.
inline constexpr std::size_t kMaxTensorDimension = 4096;

/// Identical detectors, diagonal in the internal basis: sensitivity Gamma_j
/// to internal basis state j.
class DetectorModel {
 public:
  /// Throws ValidationError unless every sensitivity is in [0, 1].
  explicit DetectorModel(std::vector<double> sensitivities);
  static DetectorModel ideal(int internal_dim);

  int internal_dim() const { return static_cast<int>(gamma_.size()); }
  double sensitivity(int j) const { return gamma_[static_cast<std::size_t>(j)]; }
  const std::vector<double>& sensitivities() const { return gamma_; }
  bool is_ideal() const;

  /// <a| Gamma |b>.
  Complex weighted_inner(const ComplexVector& a, const ComplexVector& b) const;

 private:
  std::vector<double> gamma_;
};

/// N unit vectors in a d-dimensional internal space, one per particle slot.
class PureProductState {
 public:
  /// Throws ValidationError on empty input, ragged dimensions or non-unit norms.
  explicit PureProductState(std::vector<ComplexVector> vectors);

  int particle_count() const { return static_cast<int>(vectors_.size()); }
  int internal_dim() const { return static_cast<int>(vectors_.front().size()); }
  const ComplexVector& vector(int slot) const { return vectors_[static_cast<std::size_t>(slot)]; }
  const std::vector<ComplexVector>& vectors() const { return vectors_; }

 private:
  std::vector<ComplexVector> vectors_;
};

/// Density matrix on the N-fold internal space, basis index
/// sum_a j_a d^(N-1-a) (slot 0 most significant).
class MixedInternalState {
 public:
  /// Validates shape (d^N), the d^N cap, Hermiticity (1e-10), positivity
  /// (min eigenvalue >= -1e-10) and unit trace (1e-10).
  static MixedInternalState from_density(ComplexMatrix density, int particle_count,
                                         int internal_dim);

  int particle_count() const { return particles_; }
  int internal_dim() const { return dim_; }
  std::size_t dimension() const { return static_cast<std::size_t>(density_.rows()); }
  const ComplexMatrix& density() const { return density_; }

 private:
  MixedInternalState(ComplexMatrix density, int particles, int dim)
      : density_(std::move(density)), particles_(particles), dim_(dim) {}

  ComplexMatrix density_;
  int particles_ = 0;
  int dim_ = 0;
};

/// d^n, throwing SizeLimitError above kMaxTensorDimension.
std::size_t tensor_dimension(int internal_dim, int particle_count);

/// Basis-index action of the slot permutation operator P_sigma, which moves
/// the internal state of slot a to slot sigma(a): P_sigma e_i = e_{map[i]}.
std::vector<std::size_t> tensor_permutation_map(const Permutation& sigma, int internal_dim);

/// G_{ab} = <u_a|Gamma|u_b> with u_a = phi_a / sqrt(<phi_a|Gamma|phi_a>).
/// Throws DegenerateDetectionError when a state is invisible to the detector.
ComplexMatrix gram_matrix(const PureProductState& states, const DetectorModel& detector);

/// Projects the state onto the subspace that is symmetric under the Young
/// subgroup of `input` and renormalizes:
///   rho' = Y rho Y / Tr(Y rho Y),  Y = (1/mu) sum_{pi in S_n} P_pi.
/// Only such states satisfy P_pi rho = rho, which is what the input boson
/// state can carry. Throws ValidationError if the projection vanishes.
MixedInternalState symmetrize_young(const MixedInternalState& rho, const Configuration& input);

/// Largest |(P_pi rho - rho)_{ij}| over the Young subgroup of `input`.
double young_asymmetry(const MixedInternalState& rho, const Configuration& input);

/// The product state |phi_1><phi_1| x ... x |phi_N><phi_N|.
MixedInternalState product_density(const PureProductState& states);

/// rho_1 x ... x rho_N for per-particle density matrices.
MixedInternalState product_density(std::span<const ComplexMatrix> particle_states);

}  // namespace bosefid

#endif  // BOSEFID_INTERNAL_STATE_HPP
