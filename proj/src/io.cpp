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

#include "bosefid/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bosefid/errors.hpp"

namespace bosefid {
namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    }
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    std::string value;
    if (node.is_number_float()) {
      value = format_double(node.get<double>());
    } else if (node.is_string()) {
      value = node.get<std::string>();
    } else {
      value = node.dump();
    }
    out << csv_field(path) << ',' << csv_field(value) << '\n';
  }
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ValidationError("complex numbers must be [re, im] or a real number");
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) {
    throw ValidationError("matrices must be non-empty nested arrays");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ValidationError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ValidationError("vectors must be non-empty arrays");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

Json to_json(const Configuration& c) { return Json(c.occupations()); }

Json to_json(const Distribution& d) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    entries.push_back({{"configuration", to_json(d.configuration(i))},
                       {"probability", d.probability(i)}});
  }
  return {{"modes", d.modes()}, {"particles", d.particles()}, {"total", d.total()},
          {"entries", std::move(entries)}};
}

Json to_json(const NormalizedJMatrix& j) {
  const Configuration& input = j.matrix.input();
  const SymmetricGroup& group = SymmetricGroup::of(input.total());
  Json values = Json::array();
  for (std::size_t r = 0; r < group.order(); ++r) {
    values.push_back({{"rank", r},
                      {"permutation", group.element(r).mapping()},
                      {"value", complex_to_json(j.matrix[r])}});
  }
  return {{"particles", input.total()},
          {"input", to_json(input)},
          {"detection_probability", j.detection_probability},
          {"symmetric_probability", j.symmetric_probability},
          {"values", std::move(values)}};
}

Json to_json(const BoundReport& r) {
  Json gaps = Json::array();
  for (const ConfigurationGap& g : r.per_config_gaps) {
    gaps.push_back({{"configuration", to_json(g.output)}, {"gap", g.gap}, {"bound", g.bound}});
  }
  Json bunched = Json::array();
  for (const BunchedEstimate& b : r.bunched_by_mode) {
    bunched.push_back({{"mode", b.mode},
                       {"bunched_probability", b.bunched_probability},
                       {"classical_probability", b.classical_probability},
                       {"estimate", b.estimate}});
  }
  Json out = {{"detection_probability", r.detection_probability},
              {"symmetric_probability", r.symmetric_probability},
              {"trace_distance", r.trace_distance},
              {"theorem1_bound", r.trace_distance_bound},
              {"trace_bound_holds", r.trace_bound_holds()},
              {"config_bounds_hold", r.config_bounds_hold()},
              {"per_config", std::move(gaps)},
              {"bunched_ps_estimate", nullptr},
              {"bunched_by_mode", std::move(bunched)},
              {"orthogonal_trace_distance", nullptr}};
  if (r.bunched_ps_estimate) out["bunched_ps_estimate"] = *r.bunched_ps_estimate;
  if (r.orthogonal_trace_distance) out["orthogonal_trace_distance"] = *r.orthogonal_trace_distance;
  return out;
}

Json to_json(const SmallErrorReport& r) {
  Json out = {{"fidelities", r.fidelities},
              {"min_fidelity", r.min_fidelity},
              {"detection_probability_first_order", r.detection_probability_first_order},
              {"one_minus_ps_first_order", r.one_minus_ps_first_order},
              {"scaling_bound", r.scaling_bound},
              {"exact_one_minus_ps", nullptr},
              {"exact_detection_probability", nullptr},
              {"warnings", r.warnings}};
  if (r.exact_one_minus_ps) out["exact_one_minus_ps"] = *r.exact_one_minus_ps;
  if (r.exact_detection_probability) {
    out["exact_detection_probability"] = *r.exact_detection_probability;
  }
  return out;
}

Json to_json(const ProbeResult& r) {
  return {{"d_estimate", r.d_estimate},
          {"samples", r.samples},
          {"seed", r.seed},
          {"particles", r.particles},
          {"modes", r.modes},
          {"argmax_sample", r.argmax_sample},
          {"argmax_network_digest", r.argmax_network_digest}};
}

std::string to_csv(const Json& document) {
  std::ostringstream out;
  Json rest = document;
  if (document.is_object() && document.contains("distribution") &&
      document["distribution"].contains("rows")) {
    out << "configuration,p_general,p_ideal,p_classical\n";
    for (const Json& row : document["distribution"]["rows"]) {
      std::string config;
      for (const Json& k : row["configuration"]) config += (config.empty() ? "" : " ") + k.dump();
      out << config << ',' << format_double(row["general"].get<double>()) << ','
          << format_double(row["ideal"].get<double>()) << ','
          << format_double(row["classical"].get<double>()) << '\n';
    }
    out << '\n';
    rest.erase("distribution");
  }
  out << "path,value\n";
  flatten(rest, "", out);
  return out.str();
}

Json distribution_rows(const Distribution& general, const Distribution& ideal,
                       const Distribution& classical) {
  if (general.size() != ideal.size() || general.size() != classical.size()) {
    throw DimensionError("distributions cover different configuration spaces");
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < general.size(); ++i) {
    rows.push_back({{"configuration", to_json(general.configuration(i))},
                    {"general", general.probability(i)},
                    {"ideal", ideal.probability(i)},
                    {"classical", classical.probability(i)}});
  }
  return rows;
}

}  // namespace bosefid
