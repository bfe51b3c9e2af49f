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

#include <gtest/gtest.h>

#include <random>

#include "bosefid/bounds.hpp"
#include "bosefid/conjecture_probe.hpp"
#include "bosefid/errors.hpp"
#include "support.hpp"

namespace bosefid {
namespace {

using testing::basis_vector;
using testing::beamsplitter;
using testing::with_overlap;

Configuration ones(int n) { return Configuration(std::vector<int>(static_cast<std::size_t>(n), 1)); }

NormalizedJMatrix two_photons(double c) {
  return normalize(j_from_pure(PureProductState({basis_vector(2, 0), with_overlap(2, c)}),
                               DetectorModel::ideal(2), ones(2)));
}

TEST(Theorem1, Examples) {
  EXPECT_NEAR(theorem1_bound(two_photons(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(theorem1_bound(two_photons(0.0)), 0.5, 1e-15);
  EXPECT_NEAR(theorem1_bound(two_photons(0.6)), (1.0 - 0.36) / 2.0, 1e-15);
}

TEST(Theorem2, SaturatedAtCoincidenceOnBeamsplitter) {
  for (double c : {0.0, 0.4, 0.8}) {
    const GapBound g = theorem2_bound(beamsplitter(), two_photons(c), ones(2), Configuration({1, 1}));
    EXPECT_NEAR(g.gap, (1.0 - c * c) / 2.0, 1e-15);
    EXPECT_NEAR(g.bound, g.gap, 1e-15);
  }
}

TEST(Theorem2, IdenticalStatesHaveNoGap) {
  for (const Configuration& m : enumerate_output_configurations(2, 2)) {
    EXPECT_NEAR(theorem2_bound(beamsplitter(), two_photons(1.0), ones(2), m).gap, 0.0, 1e-15);
  }
}

TEST(Theorem2, HoldsOnRandomInstances) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Configuration input = testing::random_input(5, 3, rng);
    const ComplexMatrix u = haar_random_unitary(5, rng);
    std::vector<ComplexMatrix> parts;
    for (int a = 0; a < 3; ++a) parts.push_back(testing::random_density(2, 2, rng));
    const MixedInternalState rho = symmetrize_young(product_density(parts), input);
    const NormalizedJMatrix j = normalize(j_from_mixed(rho, testing::random_detector(2, rng), input));
    for (const Configuration& m : enumerate_output_configurations(5, 3)) {
      const GapBound g = theorem2_bound(u, j, input, m);
      EXPECT_LE(g.gap, g.bound + kBoundTolerance) << m.to_string();
    }
  }
}

TEST(BunchedEstimate, Examples) {
  const ComplexMatrix u = beamsplitter();
  const NormalizedJMatrix ideal = two_photons(1.0);
  const double p_ideal = general_distribution(u, ideal).probability(Configuration({2, 0}));
  EXPECT_NEAR(bunched_ps_estimate(u, p_ideal, ones(2), 0), 1.0, 1e-12);

  for (double c : {0.0, 0.5, 0.9}) {
    const NormalizedJMatrix j = two_photons(c);
    const double p = general_distribution(u, j).probability(Configuration({2, 0}));
    EXPECT_NEAR(bunched_ps_estimate(u, p, ones(2), 0), (1.0 + c * c) / 2.0, 1e-12);
    EXPECT_NEAR(bunched_ps_estimate(u, p, ones(2), 0), j.symmetric_probability, 1e-12);
  }

  const Decomposition parts = decompose(two_photons(0.3));
  const double p_perp = general_distribution(u, *parts.orthogonal).probability(Configuration({0, 2}));
  EXPECT_NEAR(bunched_ps_estimate(u, p_perp, ones(2), 1), 0.0, 1e-15);
}

TEST(BunchedEstimate, VanishingDenominatorIsUnestimable) {
  EXPECT_THROW(bunched_ps_estimate(ComplexMatrix::Identity(2, 2), 0.0, ones(2), 0), UnestimableError);
  EXPECT_THROW(bunched_ps_estimate(beamsplitter(), 0.1, ones(2), 2), DimensionError);
}

TEST(BoundReport, RandomInstancesSatisfyEverything) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 4;
    const int n = 2 + trial % 2;
    const Configuration input = testing::random_input(m, n, rng);
    const ComplexMatrix u = haar_random_unitary(m, rng);
    std::vector<ComplexVector> vs;
    for (int a = 0; a < n; ++a) vs.push_back(testing::random_vector(2, rng));
    const MixedInternalState rho = symmetrize_young(product_density(PureProductState(vs)), input);
    const NormalizedJMatrix j = normalize(j_from_mixed(rho, testing::random_detector(2, rng), input));
    const BoundReport r = bound_report(u, j, 2);
    EXPECT_TRUE(r.trace_bound_holds());
    EXPECT_TRUE(r.config_bounds_hold());
    EXPECT_NEAR(r.trace_distance_bound, 1.0 - j.symmetric_probability, 1e-15);
    ASSERT_TRUE(r.bunched_ps_estimate.has_value());
    for (const BunchedEstimate& b : r.bunched_by_mode) {
      EXPECT_NEAR(b.estimate, j.symmetric_probability, 1e-12);
    }
    if (r.orthogonal_trace_distance) {
      EXPECT_NEAR(r.trace_distance, (1.0 - j.symmetric_probability) * *r.orthogonal_trace_distance, 1e-12);
    }
  }
}

TEST(SmallError, ExactReferenceStates) {
  const ComplexVector phi = with_overlap(3, 0.6);
  const std::vector<ComplexMatrix> parts(3, phi * phi.adjoint());
  const SmallErrorReport r = small_error_expansion(parts, phi, DetectorModel::ideal(3));
  EXPECT_NEAR(r.one_minus_ps_first_order, 0.0, 1e-15);
  EXPECT_NEAR(r.detection_probability_first_order, 1.0, 1e-15);
  ASSERT_TRUE(r.exact_one_minus_ps.has_value());
  EXPECT_NEAR(*r.exact_one_minus_ps, 0.0, 1e-12);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(SmallError, TwoParticlesFirstOrderIsExact) {
  const ComplexVector phi = basis_vector(2, 0);
  for (double f : {0.99, 0.9, 0.7}) {
    const std::vector<double> fid = {f, 1.0};
    const PureProductState s = perturbed_states(phi, fid);
    const SmallErrorReport r = small_error_expansion(s, phi, DetectorModel::ideal(2));
    EXPECT_NEAR(r.one_minus_ps_first_order, (1.0 - f) / 2.0, 1e-15);
    EXPECT_NEAR(*r.exact_one_minus_ps, (1.0 - std::norm(phi.dot(s.vector(0)))) / 2.0, 1e-12);
    EXPECT_NEAR(*r.exact_one_minus_ps, r.one_minus_ps_first_order, 1e-12);
  }
}

TEST(SmallError, UniformFidelityCountsFixedPoints) {
  for (int n = 2; n <= 6; ++n) {
    const double f = 0.97;
    const ComplexVector phi = basis_vector(n + 1, 0);
    const std::vector<double> fid(static_cast<std::size_t>(n), f);
    const SmallErrorReport r = small_error_expansion(perturbed_states(phi, fid), phi, DetectorModel::ideal(n + 1));
    EXPECT_NEAR(r.one_minus_ps_first_order, (n - 1) * (1.0 - f), 1e-13);
    EXPECT_LE(r.one_minus_ps_first_order, r.scaling_bound + 1e-12);
  }
}

// Fidelities 1 - eps c_a with mutually orthogonal error directions: the
// residual is quadratic in eps.
double residual(int n, double eps) {
  const ComplexVector phi = basis_vector(n + 1, 0);
  std::vector<double> fid;
  for (int a = 0; a < n; ++a) fid.push_back(1.0 - eps * (1.0 + 0.5 * a));
  const SmallErrorReport r = small_error_expansion(perturbed_states(phi, fid), phi, DetectorModel::ideal(n + 1));
  return std::abs(*r.exact_one_minus_ps - r.one_minus_ps_first_order);
}

TEST(SmallError, ResidualIsSecondOrder) {
  for (int n = 3; n <= 5; ++n) {
    for (double eps : {0.02, 0.01}) {
      const double ratio = residual(n, eps) / residual(n, eps / 2.0);
      EXPECT_GE(ratio, 3.5) << "n = " << n << " eps = " << eps;
      EXPECT_LE(ratio, 4.5) << "n = " << n << " eps = " << eps;
    }
  }
}

TEST(SmallError, ScalingRegimeStaysBelowConstant) {
  for (int n = 2; n <= 6; ++n) {
    const ComplexVector phi = basis_vector(n + 1, 0);
    const std::vector<double> fid(static_cast<std::size_t>(n), 1.0 - 0.1 / n);
    const SmallErrorReport r = small_error_expansion(perturbed_states(phi, fid), phi, DetectorModel::ideal(n + 1));
    EXPECT_LE(r.scaling_bound, 0.1 + 1e-15);
    EXPECT_LE(*r.exact_one_minus_ps, r.scaling_bound + 1e-12);
  }
}

TEST(SmallError, FirstOrderDetectionProbability) {
  const ComplexVector phi = with_overlap(2, 0.8);
  const DetectorModel det({1.0, 0.9});
  const std::vector<ComplexMatrix> parts(3, phi * phi.adjoint());
  const SmallErrorReport r = small_error_expansion(parts, phi, det);
  const double loss = 0.36 * 0.1;
  EXPECT_NEAR(r.detection_probability_first_order, 1.0 - 3 * loss, 1e-15);
  EXPECT_NEAR(*r.exact_detection_probability, std::pow(1.0 - loss, 3), 1e-12);
}

TEST(SmallError, MixedParticlesAgreeToFirstOrder) {
  std::mt19937_64 rng(53);
  const ComplexVector phi = basis_vector(3, 0);
  const double eps = 1e-3;
  std::vector<ComplexMatrix> parts;
  for (int a = 0; a < 3; ++a) {
    parts.push_back((1.0 - eps) * phi * phi.adjoint() + eps * testing::random_density(3, 3, rng));
  }
  const SmallErrorReport r = small_error_expansion(parts, phi, DetectorModel::ideal(3));
  for (int a = 0; a < 3; ++a) EXPECT_NEAR(r.fidelities[static_cast<std::size_t>(a)], (phi.adjoint() * parts[static_cast<std::size_t>(a)] * phi)(0, 0).real(), 1e-15);
  ASSERT_TRUE(r.exact_one_minus_ps.has_value());
  EXPECT_NEAR(*r.exact_one_minus_ps, r.one_minus_ps_first_order, 10 * eps * eps);
}

TEST(SmallError, WarningsAndErrors) {
  const ComplexVector phi = basis_vector(3, 0);
  const std::vector<double> fid = {0.7, 1.0};
  const SmallErrorReport r = small_error_expansion(perturbed_states(phi, fid), phi, DetectorModel::ideal(3));
  EXPECT_EQ(r.warnings.size(), 1U);

  ComplexVector bad = phi * 1.1;
  const std::vector<ComplexMatrix> parts(2, phi * phi.adjoint());
  EXPECT_THROW(small_error_expansion(parts, bad, DetectorModel::ideal(3)), ValidationError);
  EXPECT_THROW(perturbed_states(bad, fid), ValidationError);

  const ComplexVector big = basis_vector(5, 0);
  const std::vector<ComplexMatrix> many(6, big * big.adjoint());
  const SmallErrorReport capped = small_error_expansion(many, big, DetectorModel::ideal(5));
  EXPECT_FALSE(capped.exact_one_minus_ps.has_value());
  EXPECT_FALSE(capped.warnings.empty());
}

TEST(PerturbedStates, FidelitiesAndOrthogonalErrors) {
  std::mt19937_64 rng(54);
  const ComplexVector phi = testing::random_vector(4, rng);
  const std::vector<double> fid = {0.9, 0.8, 0.95};
  const PureProductState s = perturbed_states(phi, fid);
  for (int a = 0; a < 3; ++a) {
    EXPECT_NEAR(std::norm(phi.dot(s.vector(a))), fid[static_cast<std::size_t>(a)], 1e-14);
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const ComplexVector ea = s.vector(a) - phi * phi.dot(s.vector(a));
      const ComplexVector eb = s.vector(b) - phi * phi.dot(s.vector(b));
      EXPECT_NEAR(std::abs(ea.dot(eb)), 0.0, 1e-14);
    }
  }
}

}  // namespace
}  // namespace bosefid
