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

#ifndef BOSEFID_CONJECTURE_PROBE_HPP
#define BOSEFID_CONJECTURE_PROBE_HPP

#include <cstdint>
#include <random>
#include <string>

#include "bosefid/combinatorics.hpp"
#include "bosefid/jmatrix.hpp"
#include "bosefid/linalg.hpp"

namespace bosefid {

inline constexpr int kMaxHaarModes = 12;
/// Largest |sum_tau J_perp(tau)| accepted as orthogonal to the uniform vector.
inline constexpr double kOrthogonalityTolerance = 1e-12;

/// The antisymmetric orthogonal part: J_perp(tau) = sgn(tau)/N!. Defined for
/// collision-free inputs only, where the Young subgroup is trivial.
NormalizedJMatrix fermionic_jperp(const Configuration& input);

/// Haar-distributed M x M unitary from the QR decomposition of a complex
/// Gaussian matrix, with the phases of R's diagonal moved into Q.
ComplexMatrix haar_random_unitary(int modes, std::mt19937_64& rng);
ComplexMatrix haar_random_unitary(int modes, std::uint64_t seed);

/// Seed of the sample with the given index in the stream started by `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// 64-bit FNV-1a of the matrix entries, as 16 hex digits.
std::string network_digest(const ComplexMatrix& u);

struct ProbeResult {
  double d_estimate = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int particles = 0;
  int modes = 0;
  std::string argmax_network_digest;
  std::uint64_t argmax_sample = 0;
};

/// max over `samples` Haar networks of D(p_ideal, p_perp), where sample i
/// uses the network haar_random_unitary(M, sample_seed(seed, i)). The result
/// does not depend on `threads`, and extending `samples` never lowers it.
/// Throws ValidationError when jperp has weight on the uniform vector.
ProbeResult estimate_d(const NormalizedJMatrix& jperp, std::uint64_t samples, std::uint64_t seed,
                       int threads = 1);

}  // namespace bosefid

#endif  // BOSEFID_CONJECTURE_PROBE_HPP
