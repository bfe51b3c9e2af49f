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

#include "bosefid/jmatrix.hpp"

#include <cmath>
#include <string>

#include "bosefid/errors.hpp"

namespace bosefid {
namespace {

constexpr double kYoungTolerance = 1e-10;
constexpr double kSymmetricOnlyThreshold = 1e-14;

void require_full_matrix_size(int n) {
  if (n > kMaxTabulatedDegree) {
    throw SizeLimitError("dense J-matrix limited to N <= " + std::to_string(kMaxTabulatedDegree));
  }
}

void check_particles(const Configuration& input, int particles) {
  if (input.total() != particles) {
    throw DimensionError("input configuration carries " + std::to_string(input.total()) +
                         " particles but the state has " + std::to_string(particles));
  }
}

// Adjacent transpositions of slots that share an input mode; they generate
// the Young subgroup.
std::vector<std::size_t> young_generators(const Configuration& input) {
  const std::vector<int> slots = input.slot_modes();
  const int n = input.total();
  std::vector<std::size_t> gens;
  for (int a = 0; a + 1 < n; ++a) {
    if (slots[static_cast<std::size_t>(a)] != slots[static_cast<std::size_t>(a) + 1]) continue;
    Permutation t = Permutation::identity(n);
    std::vector<int> m = t.mapping();
    std::swap(m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(a) + 1]);
    gens.push_back(permutation_rank(Permutation(std::move(m))));
  }
  return gens;
}

}  // namespace

JMatrix::JMatrix(Configuration input, std::vector<Complex> values)
    : input_(std::move(input)), values_(std::move(values)) {
  const int n = input_.total();
  if (n < 1 || n > kMaxPermutationDegree) {
    throw SizeLimitError("J-matrix particle number outside [1, " +
                         std::to_string(kMaxPermutationDegree) + "]");
  }
  if (values_.size() != factorial(n)) {
    throw DimensionError("J-matrix needs N! = " + std::to_string(factorial(n)) + " values");
  }
}

Complex JMatrix::element(std::size_t s1, std::size_t s2) const {
  return values_[SymmetricGroup::of(particle_count()).relative(s1, s2)];
}

ComplexMatrix JMatrix::full_matrix() const {
  const int n = particle_count();
  require_full_matrix_size(n);
  const SymmetricGroup& group = SymmetricGroup::of(n);
  const auto order = static_cast<Eigen::Index>(group.order());
  ComplexMatrix full(order, order);
  for (Eigen::Index a = 0; a < order; ++a) {
    for (Eigen::Index b = 0; b < order; ++b) {
      full(a, b) = values_[group.relative(static_cast<std::size_t>(a), static_cast<std::size_t>(b))];
    }
  }
  return full;
}

JMatrix j_from_pure(const PureProductState& states, const DetectorModel& detector,
                    const Configuration& input) {
  const int n = states.particle_count();
  check_particles(input, n);
  const SymmetricGroup& group = SymmetricGroup::of(n);

  ComplexMatrix overlap(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) overlap(a, b) = detector.weighted_inner(states.vector(a), states.vector(b));
  }

  std::vector<Complex> values(group.order());
  for (std::size_t r = 0; r < group.order(); ++r) {
    const Permutation inv = group.element(group.inverse(r));
    Complex prod{1.0, 0.0};
    for (int a = 0; a < n; ++a) prod *= overlap(a, inv(a));
    values[r] = prod;
  }
  JMatrix j(input, std::move(values));
  if (young_defect(j) > kYoungTolerance * std::max(1.0, std::abs(j[0]))) {
    throw ValidationError(
        "pure product state is not symmetric under the input's Young subgroup; "
        "pass it through symmetrize_young as a density matrix");
  }
  return j;
}

JMatrix j_from_mixed(const MixedInternalState& rho, const DetectorModel& detector,
                     const Configuration& input) {
  const int n = rho.particle_count();
  check_particles(input, n);
  if (detector.internal_dim() != rho.internal_dim()) {
    throw DimensionError("detector model and state have different internal dimensions");
  }
  if (young_asymmetry(rho, input) > kYoungTolerance) {
    throw ValidationError("density matrix is not symmetric under the input's Young subgroup");
  }
  const SymmetricGroup& group = SymmetricGroup::of(n);
  const std::size_t dim = rho.dimension();
  const auto d = static_cast<std::size_t>(rho.internal_dim());

  // Diagonal of Gamma^{xN}.
  std::vector<double> weight(dim, 1.0);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t rest = i;
    for (int a = 0; a < n; ++a) {
      weight[i] *= detector.sensitivity(static_cast<int>(rest % d));
      rest /= d;
    }
  }

  const ComplexMatrix& m = rho.density();
  std::vector<Complex> values(group.order());
  for (std::size_t r = 0; r < group.order(); ++r) {
    const std::vector<std::size_t> map = tensor_permutation_map(group.element(r), rho.internal_dim());
    // Tr(A P) = sum_i A_{i, map(i)} since P e_i = e_{map(i)}.
    Complex acc{};
    for (std::size_t i = 0; i < dim; ++i) {
      acc += weight[i] * m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(map[i]));
    }
    values[r] = acc;
  }
  return JMatrix(input, std::move(values));
}

double detection_probability(const JMatrix& j) {
  const double pd = j[0].real();
  if (!(pd > 0.0)) throw DegenerateDetectionError("detection probability is zero");
  return pd;
}

double uniform_weight(const JMatrix& j) {
  double acc = 0.0;
  for (const Complex& v : j.values()) acc += v.real();
  return acc;
}

NormalizedJMatrix normalize(const JMatrix& j) {
  const double pd = detection_probability(j);
  const double scale = 1.0 / (static_cast<double>(factorial(j.particle_count())) * pd);
  std::vector<Complex> values(j.values());
  for (Complex& v : values) v *= scale;
  JMatrix scaled(j.input(), std::move(values));
  const double ps = uniform_weight(scaled);
  return NormalizedJMatrix{std::move(scaled), pd, ps};
}

Decomposition decompose(const NormalizedJMatrix& j) {
  Decomposition out;
  out.symmetric_probability = j.symmetric_probability;
  if (j.symmetric_probability >= 1.0 - kSymmetricOnlyThreshold) return out;

  const double ps = j.symmetric_probability;
  const double uniform = ps / static_cast<double>(factorial(j.matrix.particle_count()));
  std::vector<Complex> values(j.matrix.values());
  for (Complex& v : values) v = (v - uniform) / (1.0 - ps);
  JMatrix perp(j.matrix.input(), std::move(values));
  const double residual = uniform_weight(perp);
  out.orthogonal = NormalizedJMatrix{std::move(perp), j.detection_probability, residual};
  return out;
}

RealMatrix young_projector(const Configuration& input) {
  const int n = input.total();
  require_full_matrix_size(n);
  const SymmetricGroup& group = SymmetricGroup::of(n);
  const auto order = static_cast<Eigen::Index>(group.order());
  const std::vector<Permutation> young = young_subgroup(input);
  const double inv_mu = 1.0 / static_cast<double>(young.size());
  RealMatrix p = RealMatrix::Zero(order, order);
  for (Eigen::Index s = 0; s < order; ++s) {
    const Permutation& sigma = group.element(static_cast<std::size_t>(s));
    for (const Permutation& pi : young) {
      p(s, static_cast<Eigen::Index>(permutation_rank(pi * sigma))) += inv_mu;
    }
  }
  return p;
}

double young_defect(const JMatrix& j) {
  const int n = j.particle_count();
  const SymmetricGroup& group = SymmetricGroup::of(n);
  double worst = 0.0;
  for (std::size_t g : young_generators(j.input())) {
    for (std::size_t t = 0; t < group.order(); ++t) {
      worst = std::max(worst, std::abs(j[group.compose(g, t)] - j[t]));
      worst = std::max(worst, std::abs(j[group.compose(t, g)] - j[t]));
    }
  }
  return worst;
}

double hermiticity_defect(const JMatrix& j) {
  const SymmetricGroup& group = SymmetricGroup::of(j.particle_count());
  double worst = 0.0;
  for (std::size_t t = 0; t < group.order(); ++t) {
    worst = std::max(worst, std::abs(j[group.inverse(t)] - std::conj(j[t])));
  }
  return worst;
}

double min_eigenvalue(const JMatrix& j) { return min_hermitian_eigenvalue(j.full_matrix()); }

double trace_distance_to_symmetric(const NormalizedJMatrix& j) {
  ComplexMatrix diff = j.matrix.full_matrix();
  const double uniform = 1.0 / static_cast<double>(diff.rows());
  diff = ComplexMatrix::Constant(diff.rows(), diff.cols(), Complex{uniform, 0.0}) - diff;
  return 0.5 * hermitian_trace_norm(diff);
}

}  // namespace bosefid
