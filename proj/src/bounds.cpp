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

#include "bosefid/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bosefid/errors.hpp"
#include "bosefid/permanent.hpp"

namespace bosefid {
namespace {

constexpr double kNormTolerance = 1e-12;

Configuration one_per_mode(int n) { return Configuration(std::vector<int>(static_cast<std::size_t>(n), 1)); }

double bunched_classical_probability(const ComplexMatrix& u, const Configuration& input, int mode) {
  double prod = 1.0;
  for (int k : input.slot_modes()) prod *= std::norm(u(k, mode));
  return prod;
}

Configuration bunched_configuration(const Configuration& input, int mode) {
  std::vector<int> occ(static_cast<std::size_t>(input.modes()), 0);
  occ[static_cast<std::size_t>(mode)] = input.total();
  return Configuration(std::move(occ));
}

void check_reference(const ComplexVector& reference, const DetectorModel& detector) {
  if (std::abs(reference.norm() - 1.0) > kNormTolerance) {
    throw ValidationError("reference state is not normalized");
  }
  if (reference.size() != detector.internal_dim()) {
    throw DimensionError("reference state and detector model have different dimensions");
  }
}

SmallErrorReport first_order(std::vector<double> fidelities, const ComplexVector& reference,
                             const DetectorModel& detector) {
  SmallErrorReport report;
  const int n = static_cast<int>(fidelities.size());
  for (int a = 0; a < n; ++a) {
    const double infidelity = 1.0 - fidelities[static_cast<std::size_t>(a)];
    if (infidelity > kSmallErrorWarningThreshold) {
      std::ostringstream os;
      os << "particle " << a << " has infidelity " << infidelity
         << "; the first-order expansion may be inaccurate";
      report.warnings.push_back(os.str());
    }
  }

  double detector_loss = 0.0;  // <phi| (1 - Gamma) |phi>
  for (Eigen::Index j = 0; j < reference.size(); ++j) {
    detector_loss += std::norm(reference(j)) * (1.0 - detector.sensitivity(static_cast<int>(j)));
  }
  const double pd = 1.0 - n * detector_loss;
  if (!(pd > 0.0)) {
    throw DegenerateDetectionError("first-order detection probability is not positive");
  }

  double moved = 0.0;  // sum over sigma of the infidelity of non-fixed slots
  for (const Permutation& sigma : enumerate_permutations(n)) {
    for (int a = 0; a < n; ++a) {
      if (sigma(a) != a) moved += 1.0 - fidelities[static_cast<std::size_t>(a)];
    }
  }

  report.min_fidelity = *std::min_element(fidelities.begin(), fidelities.end());
  report.detection_probability_first_order = pd;
  report.one_minus_ps_first_order = moved / (pd * static_cast<double>(factorial(n)));
  report.scaling_bound = (n - 1) * (1.0 - report.min_fidelity) / pd;
  report.fidelities = std::move(fidelities);
  return report;
}

}  // namespace

bool BoundReport::trace_bound_holds() const {
  return trace_distance <= trace_distance_bound + kBoundTolerance;
}

bool BoundReport::config_bounds_hold() const {
  for (const ConfigurationGap& g : per_config_gaps) {
    if (g.gap > g.bound + kBoundTolerance) return false;
  }
  return true;
}

double theorem1_bound(const NormalizedJMatrix& j) { return 1.0 - j.symmetric_probability; }

GapBound theorem2_bound(const ComplexMatrix& u, const NormalizedJMatrix& j,
                        const Configuration& input, const Configuration& output) {
  const double p = prob_measurement_form(u, j, input, output);
  const double mu_in = static_cast<double>(multiplicity(input));
  const double mu_out = static_cast<double>(multiplicity(output));
  const double ideal = std::norm(permanent_ryser(expanded_submatrix(u, input, output))) / (mu_in * mu_out);
  const ComplexMatrix weights = u.cwiseAbs2().cast<Complex>();
  const double classical = permanent_ryser(expanded_submatrix(weights, input, output)).real() / mu_out;
  const double n_fact = static_cast<double>(factorial(input.total()));
  return GapBound{std::abs(ideal - p), (1.0 - j.symmetric_probability) * n_fact / mu_in * classical};
}

double bunched_ps_estimate(const ComplexMatrix& u, double bunched_probability,
                           const Configuration& input, int mode) {
  if (u.rows() != input.modes() || mode < 0 || mode >= input.modes()) {
    throw DimensionError("bunched output mode out of range");
  }
  const double classical = bunched_classical_probability(u, input, mode);
  if (!(classical >= std::numeric_limits<double>::min())) {
    throw UnestimableError("classical probability of the bunched output vanishes");
  }
  const double scale = static_cast<double>(factorial(input.total())) /
                       static_cast<double>(multiplicity(input));
  return bunched_probability / (scale * classical);
}

BoundReport bound_report(const ComplexMatrix& u, const NormalizedJMatrix& j, int threads) {
  const Configuration& input = j.matrix.input();
  Distribution general = general_distribution(u, j, threads);
  Distribution ideal = ideal_distribution(u, input, threads);
  Distribution classical = classical_distribution(u, input, threads);

  BoundReport report{.general = std::move(general),
                     .ideal = std::move(ideal),
                     .classical = std::move(classical)};
  report.detection_probability = j.detection_probability;
  report.symmetric_probability = j.symmetric_probability;
  report.trace_distance = trace_distance(report.ideal, report.general);
  report.trace_distance_bound = theorem1_bound(j);

  const double scale = static_cast<double>(factorial(input.total())) /
                       static_cast<double>(multiplicity(input));
  const double weight = 1.0 - j.symmetric_probability;
  for (std::size_t i = 0; i < report.general.size(); ++i) {
    report.per_config_gaps.push_back(
        ConfigurationGap{report.general.configuration(i),
                         std::abs(report.ideal.probability(i) - report.general.probability(i)),
                         weight * scale * report.classical.probability(i)});
  }

  double best_classical = 0.0;
  for (int mode = 0; mode < input.modes(); ++mode) {
    const double classical = bunched_classical_probability(u, input, mode);
    if (!(classical >= std::numeric_limits<double>::min())) continue;
    const double bunched = report.general.probability(bunched_configuration(input, mode));
    const double estimate = bunched_ps_estimate(u, bunched, input, mode);
    report.bunched_by_mode.push_back(BunchedEstimate{mode, bunched, classical, estimate});
    if (classical > best_classical) {
      best_classical = classical;
      report.bunched_ps_estimate = estimate;
    }
  }

  const Decomposition parts = decompose(j);
  if (parts.orthogonal) {
    const Distribution perp = general_distribution(u, *parts.orthogonal, threads);
    report.orthogonal_trace_distance = trace_distance(report.ideal, perp);
  }
  return report;
}

SmallErrorReport small_error_expansion(std::span<const ComplexMatrix> particle_states,
                                       const ComplexVector& reference,
                                       const DetectorModel& detector) {
  check_reference(reference, detector);
  if (particle_states.empty()) throw ValidationError("no particles given");
  std::vector<double> fidelities;
  for (const ComplexMatrix& rho : particle_states) {
    if (rho.rows() != reference.size() || rho.cols() != reference.size()) {
      throw DimensionError("particle state and reference have different dimensions");
    }
    fidelities.push_back((reference.adjoint() * rho * reference)(0, 0).real());
  }
  SmallErrorReport report = first_order(std::move(fidelities), reference, detector);

  const int n = static_cast<int>(particle_states.size());
  try {
    const MixedInternalState rho = product_density(particle_states);
    const NormalizedJMatrix j = normalize(j_from_mixed(rho, detector, one_per_mode(n)));
    report.exact_one_minus_ps = 1.0 - j.symmetric_probability;
    report.exact_detection_probability = j.detection_probability;
  } catch (const SizeLimitError&) {
    report.warnings.push_back("exact values skipped: internal tensor space exceeds the cap");
  }
  return report;
}

SmallErrorReport small_error_expansion(const PureProductState& states,
                                       const ComplexVector& reference,
                                       const DetectorModel& detector) {
  check_reference(reference, detector);
  std::vector<double> fidelities;
  for (const ComplexVector& v : states.vectors()) {
    if (v.size() != reference.size()) {
      throw DimensionError("particle state and reference have different dimensions");
    }
    fidelities.push_back(std::norm(reference.dot(v)));
  }
  SmallErrorReport report = first_order(std::move(fidelities), reference, detector);
  const NormalizedJMatrix j =
      normalize(j_from_pure(states, detector, one_per_mode(states.particle_count())));
  report.exact_one_minus_ps = 1.0 - j.symmetric_probability;
  report.exact_detection_probability = j.detection_probability;
  return report;
}

PureProductState perturbed_states(const ComplexVector& reference,
                                  std::span<const double> fidelities) {
  if (std::abs(reference.norm() - 1.0) > kNormTolerance) {
    throw ValidationError("reference state is not normalized");
  }
  if (fidelities.empty()) throw ValidationError("no fidelities given");
  const Eigen::Index d = reference.size();

  // Orthonormal basis of the complement of the reference.
  std::vector<ComplexVector> complement;
  for (Eigen::Index e = 0; e < d && static_cast<Eigen::Index>(complement.size()) < d - 1; ++e) {
    ComplexVector v = ComplexVector::Unit(d, e);
    v -= reference * reference.dot(v);
    for (const ComplexVector& c : complement) v -= c * c.dot(v);
    if (v.norm() > 1e-8) complement.push_back(v.normalized());
  }

  std::vector<ComplexVector> states;
  for (std::size_t a = 0; a < fidelities.size(); ++a) {
    const double f = fidelities[a];
    if (!(f >= 0.0 && f <= 1.0)) throw ValidationError("fidelity outside [0, 1]");
    ComplexVector v = std::sqrt(f) * reference;
    if (f < 1.0) {
      if (complement.empty()) {
        throw ValidationError("a one-dimensional internal space admits no perturbation");
      }
      v += std::sqrt(1.0 - f) * complement[a % complement.size()];
    }
    states.push_back(v.normalized());
  }
  return PureProductState(std::move(states));
}

}  // namespace bosefid
