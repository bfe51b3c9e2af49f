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

#include "bosefid/fock_oracle.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "bosefid/errors.hpp"

namespace bosefid {
namespace {

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

OracleResult simulate_first_quantized(const ComplexMatrix& u, const Configuration& input,
                                      const PureProductState& states,
                                      const DetectorModel& detector) {
  const int n = input.total();
  const int m = input.modes();
  const int d = states.internal_dim();
  if (n > kMaxOracleParticles || m > kMaxOracleModes || d > kMaxOracleInternalDim) {
    throw SizeLimitError("oracle caps are N <= 3, M <= 4, d <= 3");
  }
  if (n < 1) throw ValidationError("input has no particles");
  if (states.particle_count() != n) {
    throw DimensionError("number of internal states differs from the particle count");
  }
  if (detector.internal_dim() != d) {
    throw DimensionError("detector and states have different internal dimensions");
  }
  if (u.rows() != m || u.cols() != m) throw DimensionError("network size differs from M");
  validate_unitary(u);

  // Single-particle basis index k * d + j; slot 0 is the most significant digit.
  const std::size_t local = static_cast<std::size_t>(m * d);
  const std::size_t total = power(local, n);
  const std::vector<int> slots = input.slot_modes();

  // Symmetrized input: sum over pi of the product of v_{pi(b)} in slot b.
  std::vector<std::vector<Complex>> single(static_cast<std::size_t>(n),
                                           std::vector<Complex>(local, Complex(0.0, 0.0)));
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < d; ++j) {
      single[static_cast<std::size_t>(a)][static_cast<std::size_t>(slots[a] * d + j)] =
          states.vector(a)(j);
    }
  }
  std::vector<Complex> psi(total, Complex(0.0, 0.0));
  for (const Permutation& pi : enumerate_permutations(n)) {
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      Complex amp(1.0, 0.0);
      for (int b = n - 1; b >= 0; --b) {
        amp *= single[static_cast<std::size_t>(pi(b))][rest % local];
        rest /= local;
      }
      psi[idx] += amp;
    }
  }
  double norm2 = 0.0;
  for (const Complex& c : psi) norm2 += std::norm(c);
  if (!(norm2 > 0.0)) throw ValidationError("symmetrized input vanishes");
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& c : psi) c *= inv;

  // Network acts on the mode factor of each slot in turn.
  for (int b = 0; b < n; ++b) {
    const std::size_t stride = power(local, n - 1 - b);
    std::vector<Complex> next(total, Complex(0.0, 0.0));
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (psi[idx] == Complex(0.0, 0.0)) continue;
      const std::size_t digit = (idx / stride) % local;
      const int k = static_cast<int>(digit) / d;
      const int j = static_cast<int>(digit) % d;
      const std::size_t base = idx - digit * stride;
      for (int l = 0; l < m; ++l) {
        next[base + static_cast<std::size_t>(l * d + j) * stride] += u(k, l) * psi[idx];
      }
    }
    psi.swap(next);
  }

  std::map<Configuration, double> raw_by_config;
  std::vector<int> out_modes(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < total; ++idx) {
    const double p = std::norm(psi[idx]);
    if (p == 0.0) continue;
    std::size_t rest = idx;
    double weight = p;
    for (int b = n - 1; b >= 0; --b) {
      const int digit = static_cast<int>(rest % local);
      rest /= local;
      out_modes[static_cast<std::size_t>(b)] = digit / d;
      weight *= detector.sensitivity(digit % d);
    }
    raw_by_config[Configuration::from_modes(m, out_modes)] += weight;
  }

  std::vector<Configuration> configs = enumerate_output_configurations(m, n);
  std::vector<double> raw(configs.size(), 0.0);
  double pd = 0.0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto it = raw_by_config.find(configs[i]);
    if (it != raw_by_config.end()) raw[i] = it->second;
    pd += raw[i];
  }
  if (!(pd > 0.0)) throw DegenerateDetectionError("no particle configuration is ever detected");
  std::vector<double> post(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) post[i] = raw[i] / pd;

  return OracleResult{Distribution(m, n, configs, std::move(post)),
                      Distribution(m, n, configs, std::move(raw)), pd};
}

Distribution simulate(const ComplexMatrix& u, const Configuration& input,
                      const PureProductState& states, const DetectorModel& detector) {
  return simulate_first_quantized(u, input, states, detector).postselected;
}

}  // namespace bosefid
