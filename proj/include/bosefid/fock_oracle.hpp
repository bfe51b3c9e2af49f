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

#ifndef BOSEFID_FOCK_ORACLE_HPP
#define BOSEFID_FOCK_ORACLE_HPP

#include "bosefid/combinatorics.hpp"
#include "bosefid/distributions.hpp"
#include "bosefid/internal_state.hpp"
#include "bosefid/linalg.hpp"

namespace bosefid {

inline constexpr int kMaxOracleParticles = 3;
inline constexpr int kMaxOracleModes = 4;
inline constexpr int kMaxOracleInternalDim = 3;

struct OracleResult {
  /// Postselected on detecting all N particles.
  Distribution postselected;
  /// Gamma-weighted detection probabilities; they total p_d.
  Distribution raw;
  double detection_probability = 1.0;
};

/// Brute-force simulation in first quantization. Builds the normalized
/// symmetrization of (|k_1>|phi_1>) x ... x (|k_N>|phi_N>), sends each
/// particle's mode through the network (|k> -> sum_l U(k,l) |l>), and sums
/// Gamma-weighted squared amplitudes by output occupation.
/// Caps: N <= 3, M <= 4, d <= 3.
OracleResult simulate_first_quantized(const ComplexMatrix& u, const Configuration& input,
                                      const PureProductState& states,
                                      const DetectorModel& detector);

/// Postselected distribution of simulate_first_quantized.
Distribution simulate(const ComplexMatrix& u, const Configuration& input,
                      const PureProductState& states, const DetectorModel& detector);

}  // namespace bosefid

#endif  // BOSEFID_FOCK_ORACLE_HPP
