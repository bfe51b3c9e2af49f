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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bosefid/conjecture_probe.hpp"
#include "bosefid/errors.hpp"
#include "bosefid/instance.hpp"
#include "bosefid/io.hpp"

namespace {

struct Globals {
  std::optional<std::uint64_t> seed;
  int threads = 1;
  std::string format = "json";
  bool oracle = false;
};

void emit(const bosefid::Json& doc, const std::string& format) {
  if (format == "csv") {
    std::cout << bosefid::to_csv(doc);
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

bosefid::Json run_spec_file(const std::string& path, const Globals& g, const std::string& ensure) {
  const std::filesystem::path file(path);
  const bosefid::Json doc = bosefid::read_json_file(file);
  bosefid::InstanceSpec spec =
      bosefid::parse_instance(doc, file.parent_path(), bosefid::resolve_seed(g.seed, doc));
  if (std::find(spec.computations.begin(), spec.computations.end(), ensure) ==
      spec.computations.end()) {
    spec.computations.push_back(ensure);
  }
  return bosefid::run(spec, {g.threads, g.oracle});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial distinguishability analysis for linear optical networks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for generated networks and probes");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--oracle", g.oracle, "Cross-check against the first-quantized oracle");

  std::string simulate_spec;
  auto* simulate = app.add_subcommand("simulate", "Output distributions for an instance");
  simulate->add_option("--spec", simulate_spec, "Instance file")->required()->check(CLI::ExistingFile);

  std::string bounds_spec;
  auto* bounds = app.add_subcommand("bounds", "Trace distance, bounds and bunched estimates");
  bounds->add_option("--spec", bounds_spec, "Instance file")->required()->check(CLI::ExistingFile);

  std::string probe_spec;
  int probe_particles = 2;
  int probe_modes = 2;
  std::uint64_t probe_samples = 500;
  auto* probe = app.add_subcommand("probe", "Sample Haar networks against an orthogonal J-matrix");
  probe->add_option("--spec", probe_spec, "Instance file")->check(CLI::ExistingFile);
  probe->add_option("--particles", probe_particles, "N for the fermionic orthogonal part");
  probe->add_option("--modes", probe_modes, "M for the fermionic orthogonal part");
  probe->add_option("--samples", probe_samples, "Number of Haar samples");

  double overlap = 1.0;
  auto* hom = app.add_subcommand("hom", "Two photons on a balanced beamsplitter");
  hom->add_option("--overlap", overlap, "Overlap of the two internal states")
      ->check(CLI::Range(0.0, 1.0));

  auto* selftest = app.add_subcommand("selftest", "Oracle equivalence over the small-instance grid");

  for (CLI::App* sub : {simulate, bounds, probe, hom, selftest}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      emit(run_spec_file(simulate_spec, g, "distribution"), g.format);
    } else if (bounds->parsed()) {
      emit(run_spec_file(bounds_spec, g, "bounds"), g.format);
    } else if (probe->parsed()) {
      if (!probe_spec.empty()) {
        emit(run_spec_file(probe_spec, g, "probe"), g.format);
      } else {
        if (probe_particles < 1 || probe_modes < probe_particles) {
          throw bosefid::ValidationError("probe needs 1 <= N <= M");
        }
        const std::uint64_t seed = bosefid::resolve_seed(g.seed, bosefid::Json::object());
        std::vector<int> occ(static_cast<std::size_t>(probe_modes), 0);
        for (int a = 0; a < probe_particles; ++a) occ[static_cast<std::size_t>(a)] = 1;
        const auto jperp = bosefid::fermionic_jperp(bosefid::Configuration(occ));
        bosefid::Json doc = {{"schema_version", bosefid::kSchemaVersion},
                             {"spec",
                              {{"particles", probe_particles},
                               {"modes", probe_modes},
                               {"samples", probe_samples},
                               {"seed", seed},
                               {"source", "fermionic"}}}};
        doc["probe"] = bosefid::to_json(bosefid::estimate_d(jperp, probe_samples, seed, g.threads));
        emit(doc, g.format);
      }
    } else if (hom->parsed()) {
      const bosefid::Json doc = bosefid::hom_document(overlap);
      bosefid::InstanceSpec spec =
          bosefid::parse_instance(doc, ".", bosefid::resolve_seed(g.seed, doc));
      emit(bosefid::run(spec, {g.threads, g.oracle}), g.format);
    } else if (selftest->parsed()) {
      const bosefid::Json doc =
          bosefid::selftest(bosefid::resolve_seed(g.seed, bosefid::Json::object()), g.threads);
      emit(doc, g.format);
      if (!doc["passed"].get<bool>()) return bosefid::kExitConsistency;
    }
  } catch (const nlohmann::json::exception& e) {
    const bosefid::ValidationError wrapped(std::string("malformed instance: ") + e.what());
    emit(bosefid::error_document(wrapped), g.format);
    return bosefid::kExitValidation;
  } catch (const std::exception& e) {
    emit(bosefid::error_document(e), g.format);
    return bosefid::exit_code_for(e);
  }
  return bosefid::kExitSuccess;
}
