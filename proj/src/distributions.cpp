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

#include "bosefid/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bosefid/errors.hpp"
#include "bosefid/parallel.hpp"
#include "bosefid/permanent.hpp"

namespace bosefid {
namespace {

constexpr double kNegativeNoise = 1e-12;
constexpr double kYoungTolerance = 1e-10;

void check_network(const ComplexMatrix& u, const Configuration& input) {
  validate_unitary(u);
  if (u.rows() != input.modes()) {
    throw DimensionError("network has " + std::to_string(u.rows()) + " modes but the input has " +
                         std::to_string(input.modes()));
  }
}

void check_particles(int n, int limit) {
  if (n < 1 || n > limit) {
    throw SizeLimitError("particle number " + std::to_string(n) + " outside [1, " +
                         std::to_string(limit) + "]");
  }
}

void check_jmatrix(const JMatrix& j) {
  if (young_defect(j) > kYoungTolerance * std::max(1.0, std::abs(j[0]))) {
    throw ValidationError("J-matrix is not invariant under the input's Young subgroup");
  }
}

void check_output(const Configuration& input, const Configuration& output) {
  if (input.modes() != output.modes() || input.total() != output.total()) {
    throw DimensionError("output configuration " + output.to_string() +
                         " does not match input " + input.to_string());
  }
}

double measurement_form_unchecked(const ComplexMatrix& u, const JMatrix& j,
                                  const Configuration& input, const Configuration& output) {
  const SymmetricGroup& group = SymmetricGroup::of(input.total());
  const std::size_t order = group.order();
  const std::vector<Complex>& jv = j.values();
  double total = 0.0;
  for (const std::vector<int>& tuple : distinct_mode_tuples(output)) {
    const ComplexVector z = amplitude_vector(u, input, tuple);
    Complex quad{};
    for (std::size_t s1 = 0; s1 < order; ++s1) {
      Complex row{};
      for (std::size_t s2 = 0; s2 < order; ++s2) {
        row += jv[group.relative(s1, s2)] * z(static_cast<Eigen::Index>(s2));
      }
      quad += std::conj(z(static_cast<Eigen::Index>(s1))) * row;
    }
    total += quad.real();
  }
  return total;
}

double double_sum_unchecked(const ComplexMatrix& u, const JMatrix& j, const Configuration& input,
                            const Configuration& output) {
  const int n = input.total();
  const std::vector<int> k = input.slot_modes();
  const std::vector<int> l = output.slot_modes();
  const std::vector<Permutation> perms = enumerate_permutations(n);
  Complex acc{};
  for (const Permutation& s1 : perms) {
    for (const Permutation& s2 : perms) {
      Complex prod{1.0, 0.0};
      for (int a = 0; a < n; ++a) {
        const auto la = l[static_cast<std::size_t>(a)];
        prod *= std::conj(u(k[static_cast<std::size_t>(s1(a))], la)) *
                u(k[static_cast<std::size_t>(s2(a))], la);
      }
      acc += j.at(s1 * s2.inverse()) * prod;
    }
  }
  const double norm = static_cast<double>(multiplicity(input) * multiplicity(output));
  return acc.real() / norm;
}

template <typename Fn>
Distribution tabulate(const Configuration& input, int threads, Fn&& probability_of) {
  std::vector<Configuration> configs =
      enumerate_output_configurations(input.modes(), input.total());
  std::vector<double> probs(configs.size());
  parallel_for(configs.size(), threads,
               [&](std::size_t i) { probs[i] = clamp_probability(probability_of(configs[i])); });
  return Distribution(input.modes(), input.total(), std::move(configs), std::move(probs));
}

}  // namespace

Distribution::Distribution(int modes, int particles, std::vector<Configuration> configurations,
                           std::vector<double> probabilities)
    : modes_(modes),
      particles_(particles),
      configs_(std::move(configurations)),
      probs_(std::move(probabilities)) {
  if (configs_.size() != probs_.size()) {
    throw DimensionError("distribution needs one probability per configuration");
  }
}

double Distribution::probability(const Configuration& c) const {
  const auto it = std::find(configs_.begin(), configs_.end(), c);
  if (it == configs_.end()) {
    throw ValidationError("configuration " + c.to_string() + " not in the distribution");
  }
  return probs_[static_cast<std::size_t>(it - configs_.begin())];
}

double Distribution::total() const {
  double acc = 0.0;
  for (double p : probs_) acc += p;
  return acc;
}

ComplexVector amplitude_vector(const ComplexMatrix& u, const Configuration& input,
                               std::span<const int> output_modes) {
  const int n = input.total();
  if (static_cast<int>(output_modes.size()) != n) {
    throw DimensionError("output tuple length differs from the particle number");
  }
  const SymmetricGroup& group = SymmetricGroup::of(n);
  const std::vector<int> k = input.slot_modes();
  const double scale = 1.0 / std::sqrt(static_cast<double>(multiplicity(input)));
  ComplexVector z(static_cast<Eigen::Index>(group.order()));
  for (std::size_t r = 0; r < group.order(); ++r) {
    const Permutation& sigma = group.element(r);
    Complex prod{scale, 0.0};
    for (int a = 0; a < n; ++a) {
      prod *= u(k[static_cast<std::size_t>(sigma(a))], output_modes[static_cast<std::size_t>(a)]);
    }
    z(static_cast<Eigen::Index>(r)) = prod;
  }
  return z;
}

ComplexMatrix povm_sum(const ComplexMatrix& u, const Configuration& input) {
  const int n = input.total();
  check_particles(n, kMaxDistributionParticles);
  const auto m = static_cast<int>(u.rows());
  const auto order = static_cast<Eigen::Index>(factorial(n));
  ComplexMatrix sum = ComplexMatrix::Zero(order, order);
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  while (true) {
    const ComplexVector z = amplitude_vector(u, input, tuple);
    sum.noalias() += z * z.adjoint();
    int a = n - 1;
    while (a >= 0 && ++tuple[static_cast<std::size_t>(a)] == m) tuple[static_cast<std::size_t>(a--)] = 0;
    if (a < 0) break;
  }
  return sum;
}

double clamp_probability(double p) {
  if (p >= 0.0) return p;
  if (p >= -kNegativeNoise) return 0.0;
  throw ConsistencyError("negative probability " + std::to_string(p));
}

double prob_measurement_form(const ComplexMatrix& u, const NormalizedJMatrix& j,
                             const Configuration& input, const Configuration& output) {
  check_particles(input.total(), kMaxDistributionParticles);
  check_network(u, input);
  check_output(input, output);
  if (j.matrix.input() != input) throw DimensionError("J-matrix belongs to a different input");
  check_jmatrix(j.matrix);
  return clamp_probability(measurement_form_unchecked(u, j.matrix, input, output));
}

double prob_double_sum(const ComplexMatrix& u, const JMatrix& j, const Configuration& input,
                       const Configuration& output) {
  check_particles(input.total(), kMaxDoubleSumParticles);
  check_network(u, input);
  check_output(input, output);
  if (j.input() != input) throw DimensionError("J-matrix belongs to a different input");
  return clamp_probability(double_sum_unchecked(u, j, input, output));
}

Distribution general_distribution(const ComplexMatrix& u, const NormalizedJMatrix& j,
                                  int threads) {
  const Configuration& input = j.matrix.input();
  check_particles(input.total(), kMaxDistributionParticles);
  check_network(u, input);
  check_jmatrix(j.matrix);
  return tabulate(input, threads, [&](const Configuration& m) {
    return measurement_form_unchecked(u, j.matrix, input, m);
  });
}

Distribution raw_distribution(const ComplexMatrix& u, const JMatrix& j, int threads) {
  const Configuration& input = j.input();
  check_particles(input.total(), kMaxDoubleSumParticles);
  check_network(u, input);
  return tabulate(input, threads,
                  [&](const Configuration& m) { return double_sum_unchecked(u, j, input, m); });
}

Distribution ideal_distribution(const ComplexMatrix& u, const Configuration& input,
                                int threads) {
  check_particles(input.total(), kMaxDistributionParticles);
  check_network(u, input);
  const double mu_in = static_cast<double>(multiplicity(input));
  return tabulate(input, threads, [&](const Configuration& m) {
    const Complex per = permanent_ryser(expanded_submatrix(u, input, m));
    return std::norm(per) / (static_cast<double>(multiplicity(m)) * mu_in);
  });
}

Distribution classical_distribution(const ComplexMatrix& u, const Configuration& input,
                                    int threads) {
  check_particles(input.total(), kMaxDistributionParticles);
  check_network(u, input);
  const ComplexMatrix weights = u.cwiseAbs2().cast<Complex>();
  return tabulate(input, threads, [&](const Configuration& m) {
    const Complex per = permanent_ryser(expanded_submatrix(weights, input, m));
    return per.real() / static_cast<double>(multiplicity(m));
  });
}

double trace_distance(const Distribution& p, const Distribution& q) {
  if (p.modes() != q.modes() || p.particles() != q.particles() ||
      p.configurations() != q.configurations()) {
    throw DimensionError("distributions are over different output spaces");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p.probability(i) - q.probability(i));
  return 0.5 * acc;
}

}  // namespace bosefid
