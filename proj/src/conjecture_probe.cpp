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

#include "bosefid/conjecture_probe.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <vector>

#include <Eigen/QR>

#include "bosefid/distributions.hpp"
#include "bosefid/errors.hpp"
#include "bosefid/parallel.hpp"

namespace bosefid {

NormalizedJMatrix fermionic_jperp(const Configuration& input) {
  if (!input.is_collision_free()) {
    throw ValidationError("the fermionic orthogonal part needs a collision-free input");
  }
  const int n = input.total();
  if (n < 1 || n > kMaxDistributionParticles) {
    throw SizeLimitError("fermionic orthogonal part supports 1 <= N <= 6");
  }
  const SymmetricGroup& group = SymmetricGroup::of(n);
  const double scale = 1.0 / static_cast<double>(group.order());
  std::vector<Complex> values;
  values.reserve(group.order());
  for (const Permutation& tau : group.elements()) {
    values.emplace_back(cycle_stats(tau).sign * scale, 0.0);
  }
  const double ps = n == 1 ? 1.0 : 0.0;
  return NormalizedJMatrix{JMatrix(input, std::move(values)), 1.0, ps};
}

ComplexMatrix haar_random_unitary(int modes, std::mt19937_64& rng) {
  if (modes < 1 || modes > kMaxHaarModes) {
    throw SizeLimitError("Haar sampling supports 1 <= M <= 12");
  }
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix z(modes, modes);
  for (int r = 0; r < modes; ++r) {
    for (int c = 0; c < modes; ++c) {
      const double re = gauss(rng);
      z(r, c) = Complex(re, gauss(rng));
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int c = 0; c < modes; ++c) {
    const Complex diag = r(c, c);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(c) *= diag / mag;
  }
  return q;
}

ComplexMatrix haar_random_unitary(int modes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return haar_random_unitary(modes, rng);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer applied to a per-index offset.
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string network_digest(const ComplexMatrix& u) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto mix = [&h](double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xFFU;
      h *= 0x100000001B3ULL;
    }
  };
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      mix(u(r, c).real());
      mix(u(r, c).imag());
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ProbeResult estimate_d(const NormalizedJMatrix& jperp, std::uint64_t samples, std::uint64_t seed,
                       int threads) {
  if (std::abs(uniform_weight(jperp.matrix)) >= kOrthogonalityTolerance) {
    throw ValidationError("J_perp is not orthogonal to the uniform vector");
  }
  if (samples == 0) throw ValidationError("at least one sample is required");
  const Configuration& input = jperp.matrix.input();
  const int modes = input.modes();
  if (modes > kMaxHaarModes) throw SizeLimitError("Haar sampling supports M <= 12");

  std::vector<double> distances(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    const ComplexMatrix u = haar_random_unitary(modes, sample_seed(seed, i));
    distances[i] = trace_distance(ideal_distribution(u, input), general_distribution(u, jperp));
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < distances.size(); ++i) {
    if (distances[i] > distances[best]) best = i;
  }
  ProbeResult result;
  result.d_estimate = distances[best];
  result.samples = samples;
  result.seed = seed;
  result.particles = input.total();
  result.modes = modes;
  result.argmax_sample = best;
  result.argmax_network_digest = network_digest(haar_random_unitary(modes, sample_seed(seed, best)));
  return result;
}

}  // namespace bosefid
