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

#include "bosefid/errors.hpp"
#include "bosefid/jmatrix.hpp"
#include "bosefid/permanent.hpp"
#include "support.hpp"

namespace bosefid {
namespace {

using testing::basis_vector;
using testing::random_density;
using testing::random_pure;
using testing::slot_permutation_matrix;
using testing::with_overlap;

Configuration ones(int n) { return Configuration(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// Tr(Gamma^{xN} rho P_tau) with every operator built densely.
Complex trace_oracle(const MixedInternalState& rho, const DetectorModel& det, const Permutation& tau) {
  const ComplexMatrix g = testing::detector_tensor(det, rho.particle_count());
  return (g * rho.density() * slot_permutation_matrix(tau, rho.internal_dim())).trace();
}

TEST(JFromPure, IdenticalStates) {
  const ComplexVector v = with_overlap(2, 0.6);
  const JMatrix j = j_from_pure(PureProductState({v, v, v}), DetectorModel::ideal(2), ones(3));
  for (const Complex& x : j.values()) EXPECT_LT(std::abs(x - 1.0), 1e-15);
}

TEST(JFromPure, OrthogonalStates) {
  const JMatrix j = j_from_pure(
      PureProductState({basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2)}),
      DetectorModel::ideal(3), ones(3));
  EXPECT_EQ(j[0], Complex(1.0, 0.0));
  for (std::size_t r = 1; r < j.values().size(); ++r) EXPECT_EQ(j[r], Complex(0.0, 0.0));
}

TEST(JFromPure, TwoPhotonOverlap) {
  ComplexVector b(2);
  const Complex c(0.5, 0.4);
  b << c, std::sqrt(1.0 - std::norm(c));
  const JMatrix j = j_from_pure(PureProductState({basis_vector(2, 0), b}), DetectorModel::ideal(2), ones(2));
  EXPECT_NEAR(j[0].real(), 1.0, 1e-15);
  EXPECT_NEAR(j[1].real(), std::norm(c), 1e-15);
  EXPECT_NEAR(j[1].imag(), 0.0, 1e-15);
}

TEST(JFromPure, RejectsDistinctStatesInOneMode) {
  EXPECT_THROW(j_from_pure(PureProductState({basis_vector(2, 0), basis_vector(2, 1)}),
                           DetectorModel::ideal(2), Configuration({2})),
               ValidationError);
  EXPECT_NO_THROW(j_from_pure(PureProductState({basis_vector(2, 0), basis_vector(2, 0)}),
                              DetectorModel::ideal(2), Configuration({2})));
}

TEST(JFromMixed, MatchesPurePathOnProductStates) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const PureProductState s = random_pure(3, 2, rng);
    const DetectorModel det = testing::random_detector(2, rng);
    const JMatrix pure = j_from_pure(s, det, ones(3));
    const JMatrix mixed = j_from_mixed(product_density(s), det, ones(3));
    for (std::size_t r = 0; r < pure.values().size(); ++r) {
      EXPECT_LT(std::abs(pure[r] - mixed[r]), 1e-12);
    }
  }
}

TEST(JFromMixed, MatchesDenseTraceOracle) {
  std::mt19937_64 rng(32);
  for (const auto& occ : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {3}}) {
    const Configuration input(occ);
    const MixedInternalState rho = symmetrize_young(
        MixedInternalState::from_density(random_density(27, 4, rng), 3, 3), input);
    const DetectorModel det = testing::random_detector(3, rng);
    const JMatrix j = j_from_mixed(rho, det, input);
    for (const Permutation& tau : enumerate_permutations(3)) {
      EXPECT_LT(std::abs(j.at(tau) - trace_oracle(rho, det, tau)), 1e-13);
    }
    EXPECT_NEAR(detection_probability(j), trace_oracle(rho, det, Permutation::identity(3)).real(),
                1e-13);
  }
}

TEST(JFromMixed, MaximallyMixedTwoQubits) {
  const MixedInternalState rho =
      MixedInternalState::from_density(ComplexMatrix::Identity(4, 4) / 4.0, 2, 2);
  const JMatrix j = j_from_mixed(rho, DetectorModel::ideal(2), ones(2));
  EXPECT_NEAR(j[0].real(), 1.0, 1e-15);
  EXPECT_NEAR(j[1].real(), 0.5, 1e-15);
}

TEST(JFromMixed, SymmetricStateGivesConstantJ) {
  std::mt19937_64 rng(33);
  const MixedInternalState rho = symmetrize_young(
      MixedInternalState::from_density(random_density(8, 8, rng), 3, 2), Configuration({3}));
  const JMatrix j = j_from_mixed(rho, DetectorModel::ideal(2), ones(3));
  for (const Complex& x : j.values()) EXPECT_LT(std::abs(x - 1.0), 1e-13);
}

TEST(JFromMixed, RequiresYoungSymmetry) {
  const MixedInternalState rho = product_density(PureProductState({basis_vector(2, 0), basis_vector(2, 1)}));
  EXPECT_THROW(j_from_mixed(rho, DetectorModel::ideal(2), Configuration({2})), ValidationError);
  EXPECT_THROW(j_from_mixed(rho, DetectorModel::ideal(3), ones(2)), DimensionError);
}

TEST(DetectionProbability, Examples) {
  const ComplexVector v = with_overlap(2, 0.3);
  EXPECT_NEAR(detection_probability(j_from_pure(PureProductState({v, v}), DetectorModel::ideal(2), ones(2))),
              1.0, 1e-15);
  const double gamma = 0.7;
  const JMatrix j = j_from_pure(PureProductState({v, basis_vector(2, 1)}), DetectorModel({gamma, gamma}), ones(2));
  EXPECT_NEAR(detection_probability(j), gamma * gamma, 1e-15);
  const JMatrix zero(ones(2), {Complex(0.0, 0.0), Complex(0.0, 0.0)});
  EXPECT_THROW(detection_probability(zero), DegenerateDetectionError);
  EXPECT_THROW(normalize(zero), DegenerateDetectionError);
}

TEST(Normalize, Examples) {
  const ComplexVector v = with_overlap(2, 0.6);
  const NormalizedJMatrix same = normalize(j_from_pure(PureProductState({v, v, v}), DetectorModel::ideal(2), ones(3)));
  EXPECT_NEAR(same.symmetric_probability, 1.0, 1e-15);
  for (const Complex& x : same.matrix.values()) EXPECT_NEAR(x.real(), 1.0 / 6.0, 1e-15);

  const NormalizedJMatrix orth = normalize(
      j_from_pure(PureProductState({basis_vector(2, 0), basis_vector(2, 1)}), DetectorModel::ideal(2), ones(2)));
  EXPECT_NEAR(orth.symmetric_probability, 0.5, 1e-15);

  const double c = 0.8;
  const NormalizedJMatrix hom = normalize(
      j_from_pure(PureProductState({basis_vector(2, 0), with_overlap(2, c)}), DetectorModel::ideal(2), ones(2)));
  EXPECT_NEAR(hom.symmetric_probability, (1.0 + c * c) / 2.0, 1e-15);
}

TEST(Normalize, SymmetricProbabilityIsGramPermanent) {
  std::mt19937_64 rng(34);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const PureProductState s = random_pure(n, 3, rng);
      const DetectorModel det = testing::random_detector(3, rng);
      const NormalizedJMatrix j = normalize(j_from_pure(s, det, ones(n)));
      const double expected =
          permanent_ryser(gram_matrix(s, det)).real() / static_cast<double>(factorial(n));
      EXPECT_NEAR(j.symmetric_probability, expected, 1e-12);
    }
  }
}

TEST(Decompose, OrthogonalPair) {
  const NormalizedJMatrix j = normalize(
      j_from_pure(PureProductState({basis_vector(2, 0), basis_vector(2, 1)}), DetectorModel::ideal(2), ones(2)));
  const Decomposition d = decompose(j);
  ASSERT_TRUE(d.orthogonal.has_value());
  EXPECT_NEAR(d.symmetric_probability, 0.5, 1e-15);
  EXPECT_NEAR(d.orthogonal->matrix[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(d.orthogonal->matrix[1].real(), -0.5, 1e-15);
  EXPECT_LT(std::abs(uniform_weight(d.orthogonal->matrix)), 1e-15);
}

TEST(Decompose, FermionicMatrixIsItsOwnOrthogonalPart) {
  const JMatrix f(ones(3), {1.0 / 6, -1.0 / 6, -1.0 / 6, 1.0 / 6, 1.0 / 6, -1.0 / 6});
  const NormalizedJMatrix j{f, 1.0, 0.0};
  const Decomposition d = decompose(j);
  ASSERT_TRUE(d.orthogonal.has_value());
  EXPECT_NEAR(d.symmetric_probability, 0.0, 1e-15);
  for (std::size_t r = 0; r < 6; ++r) EXPECT_LT(std::abs(d.orthogonal->matrix[r] - f[r]), 1e-15);
}

TEST(Decompose, IdenticalStatesAreSymmetricOnly) {
  const ComplexVector v = with_overlap(2, 0.1);
  const Decomposition d = decompose(normalize(j_from_pure(PureProductState({v, v}), DetectorModel::ideal(2), ones(2))));
  EXPECT_TRUE(d.symmetric_only());
}

TEST(Decompose, ReconstructsAndIsOrthogonalOnRandomStates) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const NormalizedJMatrix j = normalize(j_from_pure(random_pure(4, 2, rng), testing::random_detector(2, rng), ones(4)));
    const Decomposition d = decompose(j);
    ASSERT_TRUE(d.orthogonal.has_value());
    const double ps = d.symmetric_probability;
    for (std::size_t r = 0; r < 24; ++r) {
      const Complex rebuilt = ps / 24.0 + (1.0 - ps) * d.orthogonal->matrix[r];
      EXPECT_LT(std::abs(rebuilt - j.matrix[r]), 1e-14);
    }
    const ComplexMatrix full = d.orthogonal->matrix.full_matrix();
    EXPECT_LT((full * ComplexVector::Ones(24)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_GT(min_eigenvalue(d.orthogonal->matrix), -1e-10);
  }
}

TEST(YoungProjector, Examples) {
  const RealMatrix trivial = young_projector(ones(3));
  EXPECT_EQ(trivial, RealMatrix::Identity(6, 6));
  const RealMatrix pair = young_projector(Configuration({2}));
  EXPECT_LT((pair - RealMatrix::Constant(2, 2, 0.5)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(pair.trace(), 1.0, 1e-15);
  for (const auto& occ : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {3, 1}, {1, 2, 1}, {4}, {3, 2}}) {
    const Configuration c(occ);
    const RealMatrix p = young_projector(c);
    EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(p.trace(), static_cast<double>(factorial(c.total()) / multiplicity(c)), 1e-12);
  }
}

// Random instances over several inputs: necessary J-matrix properties.
TEST(JMatrixProperties, RandomInstances) {
  std::mt19937_64 rng(36);
  for (const auto& occ : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 1, 1}, {2, 2}, {1, 2, 1}, {3, 1, 1}}) {
    const Configuration input(occ);
    const int n = input.total();
    for (int trial = 0; trial < 4; ++trial) {
      const int d = n <= 3 ? 3 : 2;
      std::size_t dim = 1;
      for (int a = 0; a < n; ++a) dim *= static_cast<std::size_t>(d);
      const MixedInternalState rho = symmetrize_young(
          MixedInternalState::from_density(random_density(static_cast<int>(dim), 3, rng), n, d), input);
      const DetectorModel det = testing::random_detector(d, rng);
      const JMatrix raw = j_from_mixed(rho, det, input);
      const NormalizedJMatrix j = normalize(raw);
      EXPECT_LT(hermiticity_defect(raw), 1e-12);
      EXPECT_LT(young_defect(raw), 1e-12);
      EXPECT_GT(min_eigenvalue(j.matrix), -1e-10);
      for (const Complex& x : raw.values()) EXPECT_LE(std::abs(x), raw[0].real() + 1e-12);

      const ComplexMatrix full = j.matrix.full_matrix();
      EXPECT_NEAR(full.trace().real(), 1.0, 1e-12);
      for (Eigen::Index s = 0; s < full.rows(); ++s) EXPECT_EQ(full(s, s), full(0, 0));
      const ComplexMatrix p = young_projector(input).cast<Complex>();
      EXPECT_LT((p * full - full).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT((full * p - full).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_GE(j.symmetric_probability, -1e-12);
      EXPECT_LE(j.symmetric_probability, 1.0 + 1e-12);
      EXPECT_GT(j.detection_probability, 0.0);
      EXPECT_LE(j.detection_probability, 1.0 + 1e-12);
      if (n <= 4) {
        EXPECT_NEAR(trace_distance_to_symmetric(j), 1.0 - j.symmetric_probability, 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace bosefid
