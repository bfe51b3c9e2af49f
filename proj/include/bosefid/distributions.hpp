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

#ifndef BOSEFID_DISTRIBUTIONS_HPP
#define BOSEFID_DISTRIBUTIONS_HPP

#include <span>
#include <vector>

#include "bosefid/combinatorics.hpp"
#include "bosefid/jmatrix.hpp"
#include "bosefid/linalg.hpp"

namespace bosefid {

/// Largest N accepted by the measurement-form and ideal/classical paths.
inline constexpr int kMaxDistributionParticles = 6;
/// Largest N accepted by the double-sum path (N!^2 terms per configuration).
inline constexpr int kMaxDoubleSumParticles = 5;

/// Probabilities over all output configurations of N particles in M modes,
/// in enumerate_output_configurations order.
class Distribution {
 public:
  Distribution(int modes, int particles, std::vector<Configuration> configurations,
               std::vector<double> probabilities);

  int modes() const { return modes_; }
  int particles() const { return particles_; }
  std::size_t size() const { return configs_.size(); }
  const Configuration& configuration(std::size_t i) const { return configs_[i]; }
  double probability(std::size_t i) const { return probs_[i]; }
  /// Throws ValidationError if `c` is not an output configuration here.
  double probability(const Configuration& c) const;
  const std::vector<Configuration>& configurations() const { return configs_; }
  const std::vector<double>& probabilities() const { return probs_; }
  double total() const;

 private:
  int modes_;
  int particles_;
  std::vector<Configuration> configs_;
  std::vector<double> probs_;
};

/// <sigma|Z_l> = prod_a U(k_{sigma(a)}, l_a) / sqrt(mu(n)), indexed by the
/// lexicographic rank of sigma.
ComplexVector amplitude_vector(const ComplexMatrix& u, const Configuration& input,
                               std::span<const int> output_modes);

/// sum over all M^N output tuples l of |Z_l><Z_l|. N <= 6.
ComplexMatrix povm_sum(const ComplexMatrix& u, const Configuration& input);

/// Maps float noise in [-1e-12, 0) to 0; throws ConsistencyError below that.
double clamp_probability(double p);

/// Postselected p(m) = sum_{l : occupation(l) = m} <Z_l|J|Z_l>, summing over
/// the N!/mu(m) distinct orderings of the output modes. Requires a unitary
/// network, a Young-invariant J and N <= 6.
double prob_measurement_form(const ComplexMatrix& u, const NormalizedJMatrix& j,
                             const Configuration& input, const Configuration& output);

/// Raw (not postselected) probability as the explicit double sum
///   1/(mu(m) mu(n)) sum_{s1,s2} J_{s1,s2} prod_a conj(U(k_{s1(a)}, l_a)) U(k_{s2(a)}, l_a)
/// for one representative output tuple l. N <= 5.
double prob_double_sum(const ComplexMatrix& u, const JMatrix& j, const Configuration& input,
                       const Configuration& output);

/// Postselected distribution of a partially distinguishable input.
Distribution general_distribution(const ComplexMatrix& u, const NormalizedJMatrix& j,
                                  int threads = 1);

/// Raw distribution from the double sum; totals p_d.
Distribution raw_distribution(const ComplexMatrix& u, const JMatrix& j, int threads = 1);

/// |per(U[n|m])|^2 / (mu(m) mu(n)).
Distribution ideal_distribution(const ComplexMatrix& u, const Configuration& input,
                                int threads = 1);

/// per(|U|^2[n|m]) / mu(m): fully distinguishable particles.
Distribution classical_distribution(const ComplexMatrix& u, const Configuration& input,
                                    int threads = 1);

/// (1/2) sum_m |p(m) - q(m)|.
double trace_distance(const Distribution& p, const Distribution& q);

}  // namespace bosefid

#endif  // BOSEFID_DISTRIBUTIONS_HPP
