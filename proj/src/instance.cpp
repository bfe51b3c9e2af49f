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

#include "bosefid/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "bosefid/bounds.hpp"
#include "bosefid/conjecture_probe.hpp"
#include "bosefid/distributions.hpp"
#include "bosefid/errors.hpp"
#include "bosefid/fock_oracle.hpp"

namespace bosefid {
namespace {

const std::vector<std::string> kComputations = {"distribution", "bounds", "small-error", "probe",
                                                "oracle-check"};

std::uint64_t parse_seed_string(const std::string& s) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos, 0);
    if (pos != s.size()) throw ValidationError("");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("invalid seed '" + s + "'");
  }
}

std::uint64_t seed_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
  if (j.is_string()) return parse_seed_string(j.get<std::string>());
  throw ValidationError("seeds must be non-negative integers or strings");
}

ComplexMatrix parse_network(Json& node, const std::filesystem::path& base, std::uint64_t seed) {
  if (node.is_array()) return matrix_from_json(node);
  if (!node.is_object()) throw ValidationError("network must be a matrix or an object");
  if (node.contains("matrix")) return matrix_from_json(node["matrix"]);
  if (node.contains("file")) {
    Json file = read_json_file(base / node["file"].get<std::string>());
    return matrix_from_json(file.is_object() && file.contains("matrix") ? file["matrix"] : file);
  }
  if (node.contains("haar")) {
    Json& haar = node["haar"];
    const int modes = haar.at("modes").get<int>();
    if (!haar.contains("seed")) haar["seed"] = seed;
    return haar_random_unitary(modes, seed_from_json(haar["seed"]));
  }
  throw ValidationError("network needs one of: matrix, file, haar");
}

std::vector<ComplexVector> parse_vectors(const Json& node) {
  if (!node.is_array()) throw ValidationError("pure states must be an array of vectors");
  std::vector<ComplexVector> out;
  for (const Json& v : node) out.push_back(vector_from_json(v));
  return out;
}

void parse_state(const Json& node, const std::filesystem::path& base, InstanceSpec& spec) {
  if (!node.is_object()) throw ValidationError("state must be an object");
  const int n = spec.input.total();
  if (node.contains("pure")) {
    spec.kind = StateKind::kPure;
    spec.pure.emplace(parse_vectors(node["pure"]));
  } else if (node.contains("perturbation")) {
    const Json& p = node["perturbation"];
    spec.kind = StateKind::kPure;
    spec.reference = vector_from_json(p.at("reference"));
    const auto fidelities = p.at("fidelities").get<std::vector<double>>();
    spec.pure.emplace(perturbed_states(*spec.reference, fidelities));
  } else if (node.contains("particles")) {
    spec.kind = StateKind::kParticles;
    for (const Json& m : node["particles"]) spec.particles.push_back(matrix_from_json(m));
    if (spec.particles.empty()) throw ValidationError("no particle states given");
  } else if (node.contains("density") || node.contains("density_file")) {
    spec.kind = StateKind::kDensity;
    ComplexMatrix rho;
    if (node.contains("density")) {
      rho = matrix_from_json(node["density"]);
    } else {
      Json file = read_json_file(base / node["density_file"].get<std::string>());
      rho = matrix_from_json(file.is_object() && file.contains("density") ? file["density"] : file);
    }
    const int d = node.at("internal_dim").get<int>();
    spec.density = MixedInternalState::from_density(std::move(rho), n, d);
  } else {
    throw ValidationError("state needs one of: pure, perturbation, particles, density, density_file");
  }
  if (node.contains("reference") && !spec.reference) {
    spec.reference = vector_from_json(node["reference"]);
  }

  int count = 0;
  int dim = 0;
  switch (spec.kind) {
    case StateKind::kPure:
      count = spec.pure->particle_count();
      dim = spec.pure->internal_dim();
      break;
    case StateKind::kParticles:
      count = static_cast<int>(spec.particles.size());
      dim = static_cast<int>(spec.particles.front().rows());
      break;
    case StateKind::kDensity:
      count = spec.density->particle_count();
      dim = spec.density->internal_dim();
      break;
  }
  if (count != n) throw DimensionError("state describes a different number of particles");
  spec.detector = DetectorModel::ideal(dim);
}

bool needs_projection(const PureProductState& states, const Configuration& input) {
  const std::vector<int> slots = input.slot_modes();
  for (std::size_t a = 0; a + 1 < slots.size(); ++a) {
    if (slots[a] != slots[a + 1]) continue;
    const Complex overlap = states.vector(static_cast<int>(a)).dot(states.vector(static_cast<int>(a + 1)));
    if (std::abs(1.0 - std::abs(overlap)) > 1e-12) return true;
  }
  return false;
}

struct PreparedState {
  JMatrix raw;
  NormalizedJMatrix normalized;
  std::vector<std::string> warnings;
};

PreparedState prepare(const InstanceSpec& spec) {
  std::vector<std::string> warnings;
  std::optional<JMatrix> j;
  switch (spec.kind) {
    case StateKind::kPure: {
      bool projected = false;
      j = j_for_pure_input(*spec.pure, spec.detector, spec.input, &projected);
      if (projected) warnings.emplace_back("input state projected onto the Young-symmetric subspace");
      break;
    }
    case StateKind::kParticles: {
      MixedInternalState rho = product_density(spec.particles);
      if (young_asymmetry(rho, spec.input) > 1e-10) {
        rho = symmetrize_young(rho, spec.input);
        warnings.emplace_back("input state projected onto the Young-symmetric subspace");
      }
      j = j_from_mixed(rho, spec.detector, spec.input);
      break;
    }
    case StateKind::kDensity: {
      MixedInternalState rho = *spec.density;
      if (young_asymmetry(rho, spec.input) > 1e-10) {
        rho = symmetrize_young(rho, spec.input);
        warnings.emplace_back("input state projected onto the Young-symmetric subspace");
      }
      j = j_from_mixed(rho, spec.detector, spec.input);
      break;
    }
  }
  NormalizedJMatrix normalized = normalize(*j);
  return PreparedState{std::move(*j), std::move(normalized), std::move(warnings)};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError(what);
}

double max_abs_difference(const Distribution& a, const Distribution& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.probability(i) - b.probability(i)));
  }
  return worst;
}

struct OracleComparison {
  double postselected_error = 0.0;
  double raw_error = 0.0;
  double detection_error = 0.0;
};

OracleComparison compare_with_oracle(const ComplexMatrix& u, const Configuration& input,
                                     const PureProductState& states,
                                     const DetectorModel& detector, const JMatrix& raw_j,
                                     const NormalizedJMatrix& j, int threads) {
  const OracleResult oracle = simulate_first_quantized(u, input, states, detector);
  const Distribution measurement = general_distribution(u, j, threads);
  const Distribution double_sum = raw_distribution(u, raw_j, threads);
  OracleComparison c;
  c.postselected_error = max_abs_difference(oracle.postselected, measurement);
  c.raw_error = max_abs_difference(oracle.raw, double_sum);
  c.detection_error = std::max(std::abs(oracle.detection_probability - j.detection_probability),
                               std::abs(double_sum.total() - j.detection_probability));
  return c;
}

}  // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const Json& document) {
  if (flag) return *flag;
  if (document.is_object() && document.contains("seed")) return seed_from_json(document["seed"]);
  if (const char* env = std::getenv("BOSEFID_SEED"); env != nullptr && *env != '\0') {
    return parse_seed_string(env);
  }
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

InstanceSpec parse_instance(const Json& document, const std::filesystem::path& base_dir,
                            std::uint64_t seed) {
  if (!document.is_object()) throw ValidationError("instance must be a JSON object");
  InstanceSpec spec;
  spec.resolved = document;
  spec.resolved["seed"] = seed;
  spec.seed = seed;

  spec.input = Configuration(spec.resolved.at("input").get<std::vector<int>>());
  if (spec.input.total() < 1) throw ValidationError("input has no particles");
  spec.network = parse_network(spec.resolved.at("network"), base_dir, seed);
  if (spec.network.rows() != spec.input.modes() || spec.network.cols() != spec.input.modes()) {
    throw DimensionError("network must be M x M for an input over M modes");
  }
  validate_unitary(spec.network);

  parse_state(spec.resolved.at("state"), base_dir, spec);
  if (spec.resolved.contains("detector")) {
    const Json& det = spec.resolved["detector"];
    spec.detector = DetectorModel(
        (det.is_object() ? det.at("sensitivities") : det).get<std::vector<double>>());
  }

  if (spec.resolved.contains("computations")) {
    spec.computations = spec.resolved["computations"].get<std::vector<std::string>>();
  } else {
    spec.computations = {"distribution"};
  }
  for (const std::string& c : spec.computations) {
    if (std::find(kComputations.begin(), kComputations.end(), c) == kComputations.end()) {
      throw ValidationError("unknown computation '" + c + "'");
    }
  }

  if (spec.resolved.contains("probe")) {
    Json& probe = spec.resolved["probe"];
    if (probe.contains("samples")) spec.probe.samples = probe["samples"].get<std::uint64_t>();
    if (probe.contains("source")) spec.probe.source = probe["source"].get<std::string>();
    if (!probe.contains("seed")) probe["seed"] = seed;
    spec.probe.seed = seed_from_json(probe["seed"]);
  } else {
    spec.probe.seed = seed;
  }
  if (spec.probe.source != "fermionic" && spec.probe.source != "state") {
    throw ValidationError("probe source must be 'fermionic' or 'state'");
  }
  return spec;
}

JMatrix j_for_pure_input(const PureProductState& states, const DetectorModel& detector,
                         const Configuration& input, bool* projected) {
  if (states.particle_count() != input.total()) {
    throw DimensionError("number of internal states differs from the particle count");
  }
  const bool project = needs_projection(states, input);
  if (projected != nullptr) *projected = project;
  if (!project) return j_from_pure(states, detector, input);
  return j_from_mixed(symmetrize_young(product_density(states), input), detector, input);
}

Json run(const InstanceSpec& spec, const RunOptions& options) {
  const auto wants = [&](const std::string& what) {
    return std::find(spec.computations.begin(), spec.computations.end(), what) !=
           spec.computations.end();
  };
  const int threads = std::max(1, options.threads);
  PreparedState state = prepare(spec);
  const NormalizedJMatrix& j = state.normalized;

  Json report;
  report["schema_version"] = kSchemaVersion;
  report["spec"] = spec.resolved;
  report["network"] = matrix_to_json(spec.network);
  report["jmatrix"] = to_json(j);

  if (wants("distribution")) {
    const Distribution general = general_distribution(spec.network, j, threads);
    const Distribution ideal = ideal_distribution(spec.network, spec.input, threads);
    const Distribution classical = classical_distribution(spec.network, spec.input, threads);
    report["distribution"] = {{"general", to_json(general)},
                              {"ideal", to_json(ideal)},
                              {"classical", to_json(classical)},
                              {"rows", distribution_rows(general, ideal, classical)}};
  }

  if (wants("bounds")) {
    const BoundReport bounds = bound_report(spec.network, j, threads);
    require(bounds.trace_bound_holds(), "trace distance exceeds 1 - p_s");
    require(bounds.config_bounds_hold(), "a per-configuration gap exceeds its bound");
    for (const BunchedEstimate& b : bounds.bunched_by_mode) {
      require(std::abs(b.estimate - j.symmetric_probability) <= kConsistencyTolerance,
              "bunched estimate of p_s disagrees with the J-matrix");
    }
    if (bounds.orthogonal_trace_distance) {
      const double factorized = (1.0 - j.symmetric_probability) * *bounds.orthogonal_trace_distance;
      require(std::abs(bounds.trace_distance - factorized) <= kConsistencyTolerance,
              "trace distance does not factor through the orthogonal part");
    }
    report["bounds"] = to_json(bounds);
  }

  if (wants("small-error")) {
    if (!spec.reference) throw ValidationError("small-error needs a reference state");
    SmallErrorReport small;
    if (spec.kind == StateKind::kPure) {
      small = small_error_expansion(*spec.pure, *spec.reference, spec.detector);
    } else if (spec.kind == StateKind::kParticles) {
      small = small_error_expansion(spec.particles, *spec.reference, spec.detector);
    } else {
      throw ValidationError("small-error needs per-particle states");
    }
    report["small_error"] = to_json(small);
  }

  if (wants("probe")) {
    std::optional<NormalizedJMatrix> jperp;
    if (spec.probe.source == "fermionic") {
      jperp = fermionic_jperp(spec.input);
    } else {
      Decomposition parts = decompose(j);
      if (parts.symmetric_only()) throw ValidationError("state has no orthogonal part to probe");
      jperp = std::move(parts.orthogonal);
    }
    report["probe"] = to_json(estimate_d(*jperp, spec.probe.samples, spec.probe.seed, threads));
  }

  if (wants("oracle-check") || options.oracle) {
    if (spec.kind != StateKind::kPure) throw ValidationError("the oracle needs pure product states");
    const OracleComparison c = compare_with_oracle(spec.network, spec.input, *spec.pure,
                                                   spec.detector, state.raw, j, threads);
    require(c.postselected_error <= kConsistencyTolerance,
            "oracle disagrees with the measurement-form probabilities");
    require(c.raw_error <= kConsistencyTolerance, "oracle disagrees with the double-sum probabilities");
    require(c.detection_error <= kConsistencyTolerance, "oracle detection probability disagrees");
    report["oracle_check"] = {{"postselected_max_error", c.postselected_error},
                              {"raw_max_error", c.raw_error},
                              {"detection_probability_error", c.detection_error}};
  }

  report["warnings"] = state.warnings;
  return report;
}

Json hom_document(double overlap) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw ValidationError("overlap must be in [0, 1]");
  const double h = 1.0 / std::sqrt(2.0);
  const double rest = std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
  return {{"network", {{"matrix", Json::array({Json::array({h, h}), Json::array({h, -h})})}}},
          {"input", {1, 1}},
          {"state", {{"pure", Json::array({Json::array({1.0, 0.0}), Json::array({overlap, rest})})}}},
          {"computations", {"distribution", "bounds"}}};
}

Json selftest(std::uint64_t seed, int threads) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  OracleComparison worst;
  std::size_t cases = 0;
  for (int n = 1; n <= kMaxOracleParticles; ++n) {
    for (int m = 1; m <= kMaxOracleModes; ++m) {
      for (int d = 1; d <= 2; ++d) {
        for (const bool ideal : {true, false}) {
          for (const Configuration& input : enumerate_output_configurations(m, n)) {
            const ComplexMatrix u = haar_random_unitary(m, rng);
            std::vector<ComplexVector> vectors;
            for (int a = 0; a < n; ++a) {
              ComplexVector v(d);
              for (int k = 0; k < d; ++k) v(k) = Complex(gauss(rng), gauss(rng));
              vectors.push_back(v.normalized());
            }
            std::vector<double> gamma(static_cast<std::size_t>(d), 1.0);
            if (!ideal) {
              for (double& g : gamma) g = 0.5 + 0.5 * uniform(rng);
            }
            const PureProductState states(std::move(vectors));
            const DetectorModel detector(gamma);
            const JMatrix raw = j_for_pure_input(states, detector, input);
            const OracleComparison c = compare_with_oracle(u, input, states, detector, raw,
                                                           normalize(raw), threads);
            worst.postselected_error = std::max(worst.postselected_error, c.postselected_error);
            worst.raw_error = std::max(worst.raw_error, c.raw_error);
            worst.detection_error = std::max(worst.detection_error, c.detection_error);
            ++cases;
          }
        }
      }
    }
  }
  constexpr double kTolerance = 1e-12;
  const bool passed = worst.postselected_error <= kTolerance && worst.raw_error <= kTolerance &&
                      worst.detection_error <= kTolerance;
  return {{"schema_version", kSchemaVersion},
          {"seed", seed},
          {"cases", cases},
          {"tolerance", kTolerance},
          {"postselected_max_error", worst.postselected_error},
          {"raw_max_error", worst.raw_error},
          {"detection_probability_max_error", worst.detection_error},
          {"passed", passed}};
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConsistencyError*>(&e) != nullptr) return kExitConsistency;
  if (dynamic_cast<const SizeLimitError*>(&e) != nullptr) return kExitSizeLimit;
  return kExitValidation;
}

Json error_document(const std::exception& e) {
  std::string kind = "validation";
  if (dynamic_cast<const ConsistencyError*>(&e) != nullptr) kind = "consistency-violation";
  if (dynamic_cast<const SizeLimitError*>(&e) != nullptr) kind = "size-limit";
  return {{"schema_version", kSchemaVersion},
          {"error", {{"kind", kind}, {"message", e.what()}, {"exit_code", exit_code_for(e)}}}};
}

}  // namespace bosefid
