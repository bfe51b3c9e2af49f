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

#ifndef BOSEFID_INSTANCE_HPP
#define BOSEFID_INSTANCE_HPP

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bosefid/internal_state.hpp"
#include "bosefid/io.hpp"
#include "bosefid/jmatrix.hpp"

namespace bosefid {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitValidation = 2,
  kExitConsistency = 3,
  kExitSizeLimit = 4,
};

/// Tolerance for the run-time cross-checks; exceeding it is a consistency violation.
inline constexpr double kConsistencyTolerance = 1e-10;

enum class StateKind { kPure, kDensity, kParticles };

struct ProbeSettings {
  std::uint64_t samples = 500;
  std::uint64_t seed = 0;
  /// "fermionic" or "state".
  std::string source = "fermionic";
};

/// A fully resolved instance: every file read, every seed fixed.
struct InstanceSpec {
  /// The input document with generated seeds filled in.
  Json resolved;
  std::uint64_t seed = 0;
  ComplexMatrix network;
  Configuration input;
  StateKind kind = StateKind::kPure;
  std::optional<PureProductState> pure;
  std::optional<MixedInternalState> density;
  std::vector<ComplexMatrix> particles;
  std::optional<ComplexVector> reference;
  DetectorModel detector{std::vector<double>{1.0}};
  std::vector<std::string> computations;
  ProbeSettings probe;
};

/// --seed, then the document's "seed", then BOSEFID_SEED, then a random device.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const Json& document);

/// Relative file paths are taken from `base_dir`.
InstanceSpec parse_instance(const Json& document, const std::filesystem::path& base_dir,
                            std::uint64_t seed);

/// Unnormalized J for pure states. Slots that share an input mode but carry
/// different states are first projected onto the Young-symmetric subspace,
/// in which case `projected` is set.
JMatrix j_for_pure_input(const PureProductState& states, const DetectorModel& detector,
                         const Configuration& input, bool* projected = nullptr);

struct RunOptions {
  int threads = 1;
  /// Adds the first-quantized oracle cross-check.
  bool oracle = false;
};

/// Evaluates the requested computations and returns the report document.
/// Throws ConsistencyError when a proven relation fails beyond tolerance.
Json run(const InstanceSpec& spec, const RunOptions& options);

/// Two photons on a balanced beamsplitter with internal overlap `overlap`.
Json hom_document(double overlap);

/// Oracle against both probability paths on N <= 3, M <= 4, d <= 2, with
/// ideal and non-ideal detectors. Sets "passed" in the returned document.
Json selftest(std::uint64_t seed, int threads = 1);

int exit_code_for(const std::exception& e);
Json error_document(const std::exception& e);

}  // namespace bosefid

#endif  // BOSEFID_INSTANCE_HPP
