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

#ifndef BOSEFID_BOUNDS_HPP
#define BOSEFID_BOUNDS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bosefid/distributions.hpp"
#include "bosefid/internal_state.hpp"
#include "bosefid/jmatrix.hpp"

namespace bosefid {

/// Slack allowed on the trace-distance and per-configuration inequalities.
inline constexpr double kBoundTolerance = 1e-10;

struct ConfigurationGap {
  Configuration output;
  double gap = 0.0;    // |p_ideal(m) - p(m)|
  double bound = 0.0;  // (1 - p_s) N!/mu(n) p_classical(m)
};

struct BunchedEstimate {
  int mode = 0;
  double bunched_probability = 0.0;
  double classical_probability = 0.0;
  double estimate = 0.0;
};

/// Everything the closeness analysis produces for one network and input.
struct BoundReport {
  Distribution general;
  Distribution ideal;
  Distribution classical;
  double detection_probability = 1.0;
  double symmetric_probability = 1.0;
  double trace_distance = 0.0;
  double trace_distance_bound = 0.0;
  std::vector<ConfigurationGap> per_config_gaps{};
  /// p_s recovered from the bunched output with the largest classical weight.
  std::optional<double> bunched_ps_estimate{};
  std::vector<BunchedEstimate> bunched_by_mode{};
  /// D(p_ideal, p_perp) for the orthogonal part; absent when p_s = 1.
  std::optional<double> orthogonal_trace_distance{};

  bool trace_bound_holds() const;
  bool config_bounds_hold() const;
};

/// 1 - p_s.
double theorem1_bound(const NormalizedJMatrix& j);

struct GapBound {
  double gap = 0.0;
  double bound = 0.0;
};

/// |p_ideal(m) - p(m)| and its bound (1 - p_s) N!/mu(n) p_classical(m).
GapBound theorem2_bound(const ComplexMatrix& u, const NormalizedJMatrix& j,
                        const Configuration& input, const Configuration& output);

/// p_s = p_bunched mu(n) / (N! prod_a |U(k_a, mode)|^2). Throws
/// UnestimableError when the classical bunched probability vanishes.
double bunched_ps_estimate(const ComplexMatrix& u, double bunched_probability,
                           const Configuration& input, int mode);

/// Distributions, exact trace distance, both bounds and the bunched
/// estimates for one instance.
BoundReport bound_report(const ComplexMatrix& u, const NormalizedJMatrix& j, int threads = 1);

/// First-order analysis around a common reference state.
struct SmallErrorReport {
  std::vector<double> fidelities;
  double min_fidelity = 1.0;
  double detection_probability_first_order = 1.0;
  double one_minus_ps_first_order = 0.0;
  /// (N - 1)(1 - min_fidelity) / p_d.
  double scaling_bound = 0.0;
  std::optional<double> exact_one_minus_ps;
  std::optional<double> exact_detection_probability;
  std::vector<std::string> warnings;
};

/// Fidelity above which the first-order expansion is flagged as unreliable.
inline constexpr double kSmallErrorWarningThreshold = 0.2;

/// Expansion for independent particles in mixed states rho_a near the
/// reference |phi>. The exact values come from the product density when it
/// fits under the tensor-dimension cap.
SmallErrorReport small_error_expansion(std::span<const ComplexMatrix> particle_states,
                                       const ComplexVector& reference,
                                       const DetectorModel& detector);

/// Same for pure perturbations; the exact values use the Gram-matrix path.
SmallErrorReport small_error_expansion(const PureProductState& states,
                                       const ComplexVector& reference,
                                       const DetectorModel& detector);

/// States sqrt(F_a)|phi> + sqrt(1 - F_a)|e_a>, where e_a cycles through an
/// orthonormal basis of the complement of |phi>. With d > N the error
/// directions are mutually orthogonal.
PureProductState perturbed_states(const ComplexVector& reference, std::span<const double> fidelities);

}  // namespace bosefid

#endif  // BOSEFID_BOUNDS_HPP
