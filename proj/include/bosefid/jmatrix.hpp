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

#ifndef BOSEFID_JMATRIX_HPP
#define BOSEFID_JMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bosefid/combinatorics.hpp"
#include "bosefid/internal_state.hpp"
#include "bosefid/linalg.hpp"

namespace bosefid {

/// Partial indistinguishability matrix in relative-permutation form.
///
/// values()[rank(tau)] holds J(tau) = Tr(Gamma^{xN} rho P_tau); the full
/// N! x N! matrix is J_{s1,s2} = J(s1 s2^-1). With identical detectors this
/// relative form is lossless.
class JMatrix {
 public:
  /// Throws DimensionError unless values.size() == input.total()!.
  JMatrix(Configuration input, std::vector<Complex> values);

  int particle_count() const { return input_.total(); }
  const Configuration& input() const { return input_; }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](std::size_t rank) const { return values_[rank]; }
  Complex at(const Permutation& tau) const { return values_[permutation_rank(tau)]; }

  /// J_{s1,s2} for permutation ranks s1, s2.
  Complex element(std::size_t s1, std::size_t s2) const;

  /// Dense N! x N! matrix. N <= 6.
  ComplexMatrix full_matrix() const;

 private:
  Configuration input_;
  std::vector<Complex> values_;
};

/// J / (N! p_d): a density matrix on the permutation space, together with the
/// detection probability it was normalized by and its weight on the
/// uniform (symmetric) vector.
struct NormalizedJMatrix {
  JMatrix matrix;
  double detection_probability = 1.0;
  double symmetric_probability = 0.0;
};

/// J(tau) = prod_a <phi_a|Gamma|phi_{tau^-1(a)}>. Throws ValidationError if
/// the result is not invariant under the Young subgroup of `input` (distinct
/// states sharing an input mode); such inputs must go through
/// symmetrize_young on the mixed path.
JMatrix j_from_pure(const PureProductState& states, const DetectorModel& detector,
                    const Configuration& input);

/// J(tau) = Tr(Gamma^{xN} rho P_tau). Requires rho to be symmetric under the
/// Young subgroup of `input` to 1e-10.
JMatrix j_from_mixed(const MixedInternalState& rho, const DetectorModel& detector,
                     const Configuration& input);

/// p_d = J(identity). Throws DegenerateDetectionError if not positive.
double detection_probability(const JMatrix& j);

/// Scales by 1/(N! p_d) and computes p_s = sum_tau J(tau) / (N! p_d).
NormalizedJMatrix normalize(const JMatrix& j);

/// J = p_s |s><s| + (1 - p_s) J_perp with J_perp |s> = 0.
struct Decomposition {
  double symmetric_probability = 1.0;
  /// Empty when p_s >= 1 - 1e-14: the state is purely symmetric.
  std::optional<NormalizedJMatrix> orthogonal;

  bool symmetric_only() const { return !orthogonal.has_value(); }
};

Decomposition decompose(const NormalizedJMatrix& j);

/// Projector onto Young-invariant vectors of the permutation space:
/// P_{s1,s2} = (1/mu) sum_{pi in S_n} delta(s2, pi s1). N <= 6.
RealMatrix young_projector(const Configuration& input);

/// Largest |J(g tau) - J(tau)| or |J(tau g) - J(tau)| over generators g of
/// the Young subgroup; zero iff J is invariant under the whole subgroup.
double young_defect(const JMatrix& j);

/// Largest |J(tau^-1) - conj(J(tau))|.
double hermiticity_defect(const JMatrix& j);

/// Smallest eigenvalue of the full matrix. N <= 6.
double min_eigenvalue(const JMatrix& j);

/// (1/2) trace-norm(|s><s| - J), by eigendecomposition. N <= 6.
double trace_distance_to_symmetric(const NormalizedJMatrix& j);

/// sum_tau values[tau] (real part); for a normalized matrix this is p_s.
double uniform_weight(const JMatrix& j);

}  // namespace bosefid

#endif  // BOSEFID_JMATRIX_HPP
